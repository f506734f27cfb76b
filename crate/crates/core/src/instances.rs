//! Ready-made groups with solved conjugacy.
//!
//! Everything here is a braid group, a subgroup of one cut out by a quotient
//! map, or an Artin group realized faithfully inside such a subgroup:
//!
//! * `B_n(X)` — braids whose permutation fixes every point of `X`;
//! * the colored braid group — the kernel of the permutation map;
//! * the Artin group of type `B_n` — braids on `n + 1` strands pure on the
//!   first strand;
//! * the Artin groups of affine types `A~_{n-1}` (inside type `B_n`, as the
//!   kernel of the twist of the distinguished strand) and `C~_{n-1}`
//!   (identified with `B_n({1,2})`);
//! * braid groups of the punctured disc, as braids fixing the puncture
//!   strands with zero residual twist.
//!
//! Generator dictionaries are validated at construction by evaluating every
//! defining relation through the word problem, so a wrong convention fails
//! loudly rather than silently decides wrong answers.

use std::collections::BTreeSet;

use crate::braid::{equals, BraidWord};
use crate::error::{Error, Result};
use crate::subgroup::{GroupContext, KElement, KPrime, PhiMap, PreimageTriple};

/// A Coxeter matrix: symmetric, `1` on the diagonal, off-diagonal entries at
/// least `2`, with `None` standing for infinity (no relation).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArtinPresentation {
    matrix: Vec<Vec<Option<u32>>>,
}

impl ArtinPresentation {
    pub fn new(matrix: Vec<Vec<Option<u32>>>) -> Result<Self> {
        let rank = matrix.len();
        if rank == 0 {
            return Err(Error::InvalidArgument("a presentation needs at least one generator".into()));
        }
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != rank {
                return Err(Error::InvalidArgument("the Coxeter matrix must be square".into()));
            }
            if row[i] != Some(1) {
                return Err(Error::InvalidArgument("Coxeter diagonal entries must be 1".into()));
            }
            for (j, &entry) in row.iter().enumerate() {
                if i != j {
                    if let Some(m) = entry {
                        if m < 2 {
                            return Err(Error::InvalidArgument(
                                "off-diagonal Coxeter entries must be at least 2".into(),
                            ));
                        }
                    }
                    if entry != matrix[j][i] {
                        return Err(Error::InvalidArgument(
                            "the Coxeter matrix must be symmetric".into(),
                        ));
                    }
                }
            }
        }
        Ok(ArtinPresentation { matrix })
    }

    /// The linear diagram with `rank` generators and `m = 3` between
    /// neighbours — the presentation of the braid group on `rank + 1`
    /// strands.
    pub fn braid(rank: usize) -> Result<Self> {
        Self::from_bond(rank, |i, j| if j == i + 1 { 3 } else { 2 })
    }

    /// The linear diagram whose last bond is `4`: type `B` of the given
    /// rank.
    pub fn type_b(rank: usize) -> Result<Self> {
        if rank < 2 {
            return Err(Error::InvalidArgument("type B needs rank at least 2".into()));
        }
        Self::from_bond(rank, |i, j| {
            if j == i + 1 {
                if j == rank - 1 {
                    4
                } else {
                    3
                }
            } else {
                2
            }
        })
    }

    /// The cycle diagram with `m = 3` on every edge: affine type `A~` of the
    /// given rank, which must be at least 3 for the cycle to make sense.
    pub fn affine_a(rank: usize) -> Result<Self> {
        if rank < 3 {
            return Err(Error::InvalidArgument(
                "the affine A cycle needs rank at least 3".into(),
            ));
        }
        Self::from_bond(rank, |i, j| {
            if j == i + 1 || (i == 0 && j == rank - 1) {
                3
            } else {
                2
            }
        })
    }

    fn from_bond<F: Fn(usize, usize) -> u32>(rank: usize, bond: F) -> Result<Self> {
        let matrix = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| {
                        if i == j {
                            Some(1)
                        } else {
                            Some(bond(i.min(j), i.max(j)))
                        }
                    })
                    .collect()
            })
            .collect();
        Self::new(matrix)
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    /// Bond between generators `i < j` (0-based); `None` is infinity.
    pub fn bond(&self, i: usize, j: usize) -> Option<u32> {
        self.matrix[i][j]
    }

    /// All finite defining relations as `(i, j, m)` with `i < j`.
    pub fn relations(&self) -> Vec<(usize, usize, u32)> {
        let rank = self.rank();
        let mut out = Vec::new();
        for i in 0..rank {
            for j in i + 1..rank {
                if let Some(m) = self.matrix[i][j] {
                    out.push((i, j, m));
                }
            }
        }
        out
    }
}

/// `x y x y ...` with `m` factors in total.
pub fn alternating_product(x: &BraidWord, y: &BraidWord, m: u32) -> Result<BraidWord> {
    if m < 2 {
        return Err(Error::InvalidArgument(
            "an alternating relation needs at least two factors".into(),
        ));
    }
    let mut out = BraidWord::identity(x.strands());
    for k in 0..m {
        out = out.concat(if k % 2 == 0 { x } else { y })?;
    }
    Ok(out)
}

/// Whether the images satisfy every finite relation of the presentation,
/// by the word problem of the target's ambient braid group.
pub fn verify_homomorphism(
    presentation: &ArtinPresentation,
    images: &[BraidWord],
    target: &GroupContext,
) -> Result<bool> {
    if images.len() != presentation.rank() {
        return Err(Error::InvalidArgument(format!(
            "{} generator images supplied for a rank-{} presentation",
            images.len(),
            presentation.rank()
        )));
    }
    for image in images {
        if image.strands() != target.strands() {
            return Err(Error::StrandMismatch(image.strands(), target.strands()));
        }
    }
    for (i, j, m) in presentation.relations() {
        let lhs = alternating_product(&images[i], &images[j], m)?;
        let rhs = alternating_product(&images[j], &images[i], m)?;
        if !equals(&lhs, &rhs)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// An Artin group carried into a braid-group context by generator images.
/// Elements are written as words in the presentation's generators and mapped
/// to braid words before any computation.
#[derive(Clone, Debug)]
pub struct RealizedGroup {
    presentation: ArtinPresentation,
    context: GroupContext,
    generator_images: Vec<BraidWord>,
}

impl RealizedGroup {
    /// Checks that the images satisfy the presentation and lie in the
    /// context before accepting the realization.
    pub fn new(
        presentation: ArtinPresentation,
        context: GroupContext,
        generator_images: Vec<BraidWord>,
    ) -> Result<Self> {
        if !verify_homomorphism(&presentation, &generator_images, &context)? {
            return Err(Error::RealizationFailed(
                "a defining relation does not hold among the generator images".into(),
            ));
        }
        for (k, image) in generator_images.iter().enumerate() {
            if !context.contains(image)? {
                return Err(Error::RealizationFailed(format!(
                    "the image of generator {} lies outside the target group",
                    k + 1
                )));
            }
        }
        Ok(RealizedGroup { presentation, context, generator_images })
    }

    pub fn presentation(&self) -> &ArtinPresentation {
        &self.presentation
    }

    pub fn context(&self) -> &GroupContext {
        &self.context
    }

    pub fn generator_images(&self) -> &[BraidWord] {
        &self.generator_images
    }

    /// Maps a word in the presentation's generators (1-based, sign for
    /// inverse) to a braid word.
    pub fn map_word(&self, letters: &[i32]) -> Result<BraidWord> {
        let rank = self.presentation.rank() as i32;
        let mut out = BraidWord::identity(self.context.strands());
        for &letter in letters {
            if letter == 0 || letter.abs() > rank {
                return Err(Error::InvalidArgument(format!(
                    "generator index {letter} is outside 1..={rank}"
                )));
            }
            let image = &self.generator_images[(letter.abs() - 1) as usize];
            out = out.concat(&if letter > 0 { image.clone() } else { image.inverse() })?;
        }
        Ok(out)
    }
}

/// Braids on `n` strands whose permutation fixes every point of `x`.
pub fn bn_x_context(n: usize, x: &BTreeSet<usize>) -> Result<GroupContext> {
    GroupContext::braid_group(n)?.subgroup(PreimageTriple::symmetric_fixing(n, x)?)
}

/// The colored (pure) braid group: the kernel of the permutation map.
pub fn colored_context(n: usize) -> Result<GroupContext> {
    bn_x_context(n, &(1..=n).collect())
}

/// The Artin group of type `B_n`, realized as the braids on `n + 1` strands
/// pure on strand 1: the chain generator `b_i` maps to `sigma_{n+1-i}` and
/// the short generator `b_n` to `sigma_1^2`, the full twist of strand 1
/// around its neighbour.
pub fn type_b_context(n: usize) -> Result<RealizedGroup> {
    if n < 2 {
        return Err(Error::InvalidArgument("type B needs rank at least 2".into()));
    }
    let strands = n + 1;
    let context = bn_x_context(strands, &[1].into_iter().collect())?;
    let mut images = Vec::with_capacity(n);
    for i in 1..n {
        images.push(BraidWord::new(strands, vec![(n + 1 - i) as i32])?);
    }
    images.push(BraidWord::new(strands, vec![1, 1])?);
    RealizedGroup::new(ArtinPresentation::type_b(n)?, context, images)
}

/// The twist of the strand starting at position 1 — the map whose kernel
/// realizes affine type A inside type B.
fn distinguished_twist() -> Result<PreimageTriple> {
    PreimageTriple::new(PhiMap::StrandLinking { strand: 1 }, KPrime::ZeroOnly)
}

/// The Artin group of affine type `A~_{n-1}` (`n >= 3` generators in a
/// cycle), realized inside the type `B_n` group as the kernel of the
/// distinguished-strand twist.  The cycle-closing generator maps to
/// `(b_2 ... b_n)^-1 b_1 (b_2 ... b_n)`.
///
/// Centralizers are not computable in this context: their twist image is a
/// non-trivial subgroup of the integers, of infinite index over the trivial
/// one.
pub fn affine_a_context(n: usize) -> Result<RealizedGroup> {
    if n < 3 {
        return Err(Error::InvalidArgument(
            "the affine A cycle needs at least 3 generators".into(),
        ));
    }
    let type_b = type_b_context(n)?;
    let context = type_b.context().subgroup(distinguished_twist()?)?;
    let b = type_b.generator_images();
    let mut images: Vec<BraidWord> = b[..n - 1].to_vec();
    let mut tail = BraidWord::identity(context.strands());
    for image in &b[1..n] {
        tail = tail.concat(image)?;
    }
    images.push(tail.inverse().concat(&b[0])?.concat(&tail)?);
    RealizedGroup::new(ArtinPresentation::affine_a(n)?, context, images)
}

/// The Artin group of affine type `C~_{n-1}`, identified with the braids on
/// `n` strands fixing points 1 and 2.  Elements are supplied directly as
/// braid words.
pub fn affine_c_context(n: usize) -> Result<GroupContext> {
    if n < 3 {
        return Err(Error::InvalidArgument(
            "affine type C needs at least 3 strands".into(),
        ));
    }
    bn_x_context(n, &[1, 2].into_iter().collect())
}

/// Deletes every strand starting at a position above `keep` and returns the
/// residual twist of the kept pair: the image in the colored braid group on
/// two strands, identified with the integers by one full twist = 1.
///
/// Only `keep = 2` lands in an infinite cyclic group.  Larger targets are
/// refused: no decidable-membership quotient exists once the colored braid
/// group contains a product of free groups (`keep >= 5`), and no method is
/// known for `keep = 3, 4`.
pub fn strand_deletion(w: &BraidWord, keep: usize) -> Result<i64> {
    match keep {
        2 => {}
        3 | 4 => return Err(Error::NoKnownMethod { m: keep }),
        m if m >= 5 => return Err(Error::NoValidTriple { m }),
        _ => {
            return Err(Error::InvalidArgument(
                "deleting down to fewer than 2 strands leaves no twist to measure".into(),
            ))
        }
    }
    let mu = w.strand_permutation();
    if !mu.fixes(1..=keep)? {
        return Err(Error::NotInSubgroup(
            "the word permutes the kept strands, so deletion is not defined on it".into(),
        ));
    }
    match (PhiMap::KeptTwist { kept: keep }).apply(w)? {
        KElement::Int(z) => Ok(z),
        KElement::Perm(_) => unreachable!("twist maps produce integers"),
    }
}

/// The braid group of the disc with `m` punctures, on the remaining
/// `n - m` strands: braids in `B_n` fixing the first `m` strands, with zero
/// residual twist among them.
pub fn ib_context(n: usize, m: usize) -> Result<GroupContext> {
    match m {
        0 => Err(Error::InvalidArgument("at least one puncture is needed".into())),
        1 => bn_x_context(n, &[1].into_iter().collect()),
        2 => {
            let base = bn_x_context(n, &[1, 2].into_iter().collect())?;
            base.subgroup(PreimageTriple::new(PhiMap::KeptTwist { kept: 2 }, KPrime::ZeroOnly)?)
        }
        3 | 4 => Err(Error::NoKnownMethod { m }),
        _ => Err(Error::NoValidTriple { m }),
    }
}

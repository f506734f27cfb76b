//! Conjugacy in subgroups of the form `H = phi^-1(K')`.
//!
//! Given a group `G` with solved conjugacy and computable centralizers, a
//! homomorphism `phi` from `G` into a group `K` with decidable membership for
//! finitely generated subgroups, and a finite subgroup `K'` of `K`, the
//! preimage `H = phi^-1(K')` inherits an explicit conjugacy solution:
//!
//! 1. decide conjugacy of `a, b` in `G`, obtaining a conjugator `h`;
//! 2. the full set of conjugators is `C_G(a) * h`, so `a` and `b` are
//!    conjugate in `H` exactly when `phi(C_G(a)) * phi(h)` meets `K'`; search
//!    that finite question with a membership oracle over
//!    `Q = phi(C_G(a))` and, on success, pull a witness `d_1 ... d_q` back
//!    through the oracle's words to form `h' = d_1 ... d_q * h` in `H`.
//!
//! Because the construction only needs conjugacy and centralizers in `G`,
//! contexts stack: the subgroup built at one level serves as the ambient
//! group of the next.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::collections::HashSet;

use crate::braid::{equals, signed_crossings, BraidWord, NormalForm};
use crate::centralizer::centralizer_generators;
use crate::conjugacy::{conjugate_in_braid_group, ConjugacyCertificate};
use crate::error::{Error, Result};
use crate::perm::{build_chain, LabelWord, Permutation};

/// A value in the target group of a quotient map: a permutation or an
/// integer.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum KElement {
    Perm(Permutation),
    Int(i64),
}

/// The homomorphism defining a subgroup level, evaluated directly on braid
/// words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PhiMap {
    /// The underlying permutation of a braid.
    SymmetricProjection,
    /// Half the signed count of crossings involving the strand that starts
    /// at position `strand`.  A homomorphism on braids whose permutation
    /// fixes `strand`; one full twist of that strand around one neighbour
    /// counts 1.
    StrandLinking { strand: usize },
    /// Half the signed count of crossings among the strands starting at
    /// positions `1..=kept` — the total twist that survives deleting every
    /// other strand.  A homomorphism on braids whose permutation fixes each
    /// kept position; requires `kept = 2` for the value to land in an
    /// infinite cyclic group.
    KeptTwist { kept: usize },
}

impl PhiMap {
    /// Evaluates the map on a word.  For the crossing-count maps the word
    /// must preserve the measured strands, otherwise the count is odd and the
    /// value is undefined.
    pub fn apply(&self, w: &BraidWord) -> Result<KElement> {
        match self {
            PhiMap::SymmetricProjection => Ok(KElement::Perm(w.strand_permutation())),
            PhiMap::StrandLinking { strand } => {
                let s = *strand;
                half_crossings(w, |x, y| x == s || y == s)
            }
            PhiMap::KeptTwist { kept } => {
                let m = *kept;
                half_crossings(w, |x, y| x <= m && y <= m)
            }
        }
    }
}

fn half_crossings<F: Fn(usize, usize) -> bool>(w: &BraidWord, pair: F) -> Result<KElement> {
    let total = signed_crossings(w, pair);
    if total.rem_euclid(2) != 0 {
        return Err(Error::OutsideDomain(format!(
            "signed crossing count {total} is odd, so the word moves a measured strand \
             and the twist map is undefined on it"
        )));
    }
    Ok(KElement::Int(total / 2))
}

/// The finite subgroup `K'` of the target group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KPrime {
    /// A finite permutation group given by its full element set.
    PermSet(BTreeSet<Permutation>),
    /// The trivial subgroup of the integers — the only finite one.
    ZeroOnly,
}

impl KPrime {
    pub fn contains(&self, k: &KElement) -> bool {
        match (self, k) {
            (KPrime::PermSet(set), KElement::Perm(p)) => set.contains(p),
            (KPrime::ZeroOnly, KElement::Int(z)) => *z == 0,
            _ => false,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            KPrime::PermSet(set) => set.len(),
            KPrime::ZeroOnly => 1,
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// The data cutting one subgroup level out of its ambient group: the map
/// `phi` and the finite subgroup `K'` whose preimage is taken.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreimageTriple {
    phi: PhiMap,
    kprime: KPrime,
}

impl PreimageTriple {
    /// Validates that `kprime` fits `phi` and really is a finite subgroup:
    /// non-empty, uniform degree, containing the identity, closed under
    /// inverses and products.
    pub fn new(phi: PhiMap, kprime: KPrime) -> Result<Self> {
        match (&phi, &kprime) {
            (PhiMap::SymmetricProjection, KPrime::PermSet(set)) => {
                let Some(first) = set.iter().next() else {
                    return Err(Error::InvalidArgument(
                        "the target subgroup must contain at least the identity".into(),
                    ));
                };
                let degree = first.degree();
                for p in set {
                    if p.degree() != degree {
                        return Err(Error::DegreeMismatch(p.degree(), degree));
                    }
                }
                if !set.contains(&Permutation::identity(degree)) {
                    return Err(Error::InvalidArgument(
                        "the target subgroup must contain the identity".into(),
                    ));
                }
                for p in set {
                    if !set.contains(&p.inverse()) {
                        return Err(Error::InvalidArgument(format!(
                            "target subgroup is not inverse-closed: missing the inverse of {p}"
                        )));
                    }
                    for q in set {
                        if !set.contains(&p.mul(q)) {
                            return Err(Error::InvalidArgument(format!(
                                "target subgroup is not closed under products: {p} * {q} escapes"
                            )));
                        }
                    }
                }
            }
            (PhiMap::StrandLinking { .. } | PhiMap::KeptTwist { .. }, KPrime::ZeroOnly) => {}
            _ => {
                return Err(Error::InvalidArgument(
                    "the finite subgroup must live in the map's target group".into(),
                ));
            }
        }
        Ok(PreimageTriple { phi, kprime })
    }

    /// The triple carving braids whose permutation fixes every point of `x`
    /// out of `B_n`: `phi` is the symmetric projection and `K'` the
    /// stabilizer of `x` — a subgroup by construction, so no closure check.
    pub fn symmetric_fixing(n: usize, x: &BTreeSet<usize>) -> Result<Self> {
        let set = crate::perm::enumerate_sigma_x(n, x)?;
        Ok(PreimageTriple {
            phi: PhiMap::SymmetricProjection,
            kprime: KPrime::PermSet(set.into_iter().collect()),
        })
    }

    pub fn phi(&self) -> &PhiMap {
        &self.phi
    }

    pub fn kprime(&self) -> &KPrime {
        &self.kprime
    }
}

/// A group with an explicit conjugacy solution: the braid group `B_n`
/// (empty tower) or a stack of preimage subgroups over it.  Elements at every
/// level are plain braid words on `strands` strands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupContext {
    strands: usize,
    tower: Vec<PreimageTriple>,
}

impl GroupContext {
    pub fn braid_group(strands: usize) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidArgument("a braid group needs at least one strand".into()));
        }
        Ok(GroupContext { strands, tower: Vec::new() })
    }

    /// The context for `H = phi^-1(K')` inside this group.
    pub fn subgroup(&self, triple: PreimageTriple) -> Result<Self> {
        match (&triple.phi, &triple.kprime) {
            (PhiMap::SymmetricProjection, KPrime::PermSet(set)) => {
                let degree = set.iter().next().map(Permutation::degree).unwrap_or(self.strands);
                if degree != self.strands {
                    return Err(Error::DegreeMismatch(degree, self.strands));
                }
            }
            (PhiMap::StrandLinking { strand }, _) => {
                if *strand == 0 || *strand > self.strands {
                    return Err(Error::PointOutOfRange { point: *strand, degree: self.strands });
                }
            }
            (PhiMap::KeptTwist { kept }, _) => {
                if *kept < 2 || *kept > self.strands {
                    return Err(Error::InvalidArgument(format!(
                        "measuring the twist of {kept} strands out of {} is not meaningful",
                        self.strands
                    )));
                }
            }
            _ => {}
        }
        let mut tower = self.tower.clone();
        tower.push(triple);
        Ok(GroupContext { strands: self.strands, tower })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    /// Number of subgroup levels below the full braid group.
    pub fn depth(&self) -> usize {
        self.tower.len()
    }

    pub fn triples(&self) -> &[PreimageTriple] {
        &self.tower
    }

    fn parent(&self) -> GroupContext {
        GroupContext {
            strands: self.strands,
            tower: self.tower[..self.tower.len() - 1].to_vec(),
        }
    }

    /// Whether `w` lies in this group: its image at every level must fall in
    /// that level's finite subgroup, checked from the bottom of the tower up.
    pub fn contains(&self, w: &BraidWord) -> Result<bool> {
        if w.strands() != self.strands {
            return Err(Error::StrandMismatch(w.strands(), self.strands));
        }
        for triple in &self.tower {
            if !triple.kprime.contains(&triple.phi.apply(w)?) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn require_member(&self, w: &BraidWord, role: &str) -> Result<()> {
        if self.contains(w)? {
            Ok(())
        } else {
            Err(Error::NotInSubgroup(format!(
                "{role} has an image outside the defining finite subgroup at some level \
                 of this group"
            )))
        }
    }

    /// Decides conjugacy of two members of this group, producing an explicit
    /// conjugator that itself lies in the group.  `Ok(None)` means not
    /// conjugate here (they may still be conjugate in the ambient group).
    pub fn conjugate(&self, a: &BraidWord, b: &BraidWord) -> Result<Option<ConjugacyCertificate>> {
        self.require_member(a, "the first element")?;
        self.require_member(b, "the second element")?;
        self.conjugate_members(a, b)
    }

    fn conjugate_members(&self, a: &BraidWord, b: &BraidWord) -> Result<Option<ConjugacyCertificate>> {
        let Some((triple, _)) = self.tower.split_last() else {
            return conjugate_in_braid_group(a, b);
        };
        let parent = self.parent();
        match parent.conjugate_members(a, b)? {
            None => Ok(None),
            Some(cert) => {
                Ok(lift_core(&parent, triple, a, &cert.conjugator, SearchPath::Auto)?.map(
                    |conjugator| ConjugacyCertificate { a: a.clone(), b: b.clone(), conjugator },
                ))
            }
        }
    }

    /// A finite generating set for the centralizer of `a` in this group.
    /// Fails with [`Error::InfiniteIndex`] when the centralizer image in the
    /// integers is non-trivial, since the trivial subgroup then has infinite
    /// index and Schreier enumeration cannot terminate.
    pub fn centralizer(&self, a: &BraidWord) -> Result<Vec<BraidWord>> {
        self.require_member(a, "the element")?;
        self.centralizer_members(a)
    }

    fn centralizer_members(&self, a: &BraidWord) -> Result<Vec<BraidWord>> {
        let Some((triple, _)) = self.tower.split_last() else {
            return Ok(centralizer_generators(a));
        };
        let parent = self.parent();
        centralizer_core(&parent, triple, a)
    }
}

/// Which finite side of the coset question the conjugator search walks.
/// The explicit variants exist so tests can cross-check the two loops.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(not(test), allow(dead_code))]
pub(crate) enum SearchPath {
    /// Iterate over whichever of `K'` and `Q = phi(C_G(a))` is smaller.
    Auto,
    /// Iterate `p` over `K'`, asking the oracle for `p * phi(h)^-1`.
    KprimeLoop,
    /// Iterate `q` over `Q`, testing `q * phi(h)` for membership in `K'`.
    ImageLoop,
}

/// Lifts a `G`-conjugator to an `H`-conjugator when one exists.
///
/// Requires `a` in `H` and `h^-1 a h = b` in the ambient group.  The set of
/// all conjugators is `C_G(a) * h`; this returns `d_1 ... d_q * h` with
/// image in `K'`, or `None` when the coset image misses `K'` entirely — in
/// that case `a` and `b` are not conjugate in `H`.  (If `b` itself lies
/// outside `H` the search is necessarily empty, since a witness would force
/// the image of `b` into `K'`.)
pub fn lift_conjugator(
    parent: &GroupContext,
    triple: &PreimageTriple,
    a: &BraidWord,
    b: &BraidWord,
    h: &BraidWord,
) -> Result<Option<BraidWord>> {
    let sub = parent.subgroup(triple.clone())?;
    sub.require_member(a, "the first element")?;
    if !parent.contains(h)? {
        return Err(Error::PreconditionViolated(
            "the proposed conjugator lies outside the ambient group of this level".into(),
        ));
    }
    if !equals(&a.conjugated_by(h)?, b)? {
        return Err(Error::PreconditionViolated(
            "the proposed element does not conjugate the first element to the second".into(),
        ));
    }
    lift_core(parent, triple, a, h, SearchPath::Auto)
}

pub(crate) fn lift_core(
    parent: &GroupContext,
    triple: &PreimageTriple,
    a: &BraidWord,
    h: &BraidWord,
    path: SearchPath,
) -> Result<Option<BraidWord>> {
    let d_gens = parent.centralizer_members(a)?;
    match (&triple.phi, &triple.kprime) {
        (PhiMap::SymmetricProjection, KPrime::PermSet(set)) => {
            let KElement::Perm(phi_h) = triple.phi.apply(h)? else { unreachable!() };
            lift_through_permutations(&d_gens, triple, set, &phi_h, h, path)
        }
        (_, KPrime::ZeroOnly) => {
            let KElement::Int(z_h) = triple.phi.apply(h)? else { unreachable!() };
            lift_through_integers(&d_gens, triple, z_h, h)
        }
        _ => Err(Error::InvalidArgument("mismatched map and target subgroup".into())),
    }
}

fn phi_perm(triple: &PreimageTriple, w: &BraidWord) -> Result<Permutation> {
    match triple.phi.apply(w)? {
        KElement::Perm(p) => Ok(p),
        KElement::Int(_) => Err(Error::InvalidArgument("expected a permutation image".into())),
    }
}

fn phi_int(triple: &PreimageTriple, w: &BraidWord) -> Result<i64> {
    match triple.phi.apply(w)? {
        KElement::Int(z) => Ok(z),
        KElement::Perm(_) => Err(Error::InvalidArgument("expected an integer image".into())),
    }
}

/// Concatenates `lifts[label]^exponent` left to right; mirrors how label
/// words evaluate in the image group, so the image of the result is exactly
/// the oracle's target.
fn braid_of_label_word(strands: usize, lifts: &[BraidWord], word: &LabelWord) -> BraidWord {
    let mut out = BraidWord::identity(strands);
    for &(label, exponent) in word {
        let piece = if exponent >= 0 { lifts[label].clone() } else { lifts[label].inverse() };
        for _ in 0..exponent.unsigned_abs() {
            out = out.concat(&piece).expect("same strand count");
        }
    }
    out
}

fn lift_through_permutations(
    d_gens: &[BraidWord],
    triple: &PreimageTriple,
    kprime: &BTreeSet<Permutation>,
    phi_h: &Permutation,
    h: &BraidWord,
    path: SearchPath,
) -> Result<Option<BraidWord>> {
    let n = h.strands();
    // One representative word per distinct non-trivial centralizer image.
    let mut images: Vec<Permutation> = Vec::new();
    let mut lifts: Vec<BraidWord> = Vec::new();
    for d in d_gens {
        let image = phi_perm(triple, d)?;
        if !image.is_identity() && !images.contains(&image) {
            images.push(image);
            lifts.push(d.clone());
        }
    }
    let chain = if images.is_empty() { None } else { Some(build_chain(&images)?) };
    let q_order = chain.as_ref().map(|c| c.order()).unwrap_or(1);
    let use_kprime = match path {
        SearchPath::KprimeLoop => true,
        SearchPath::ImageLoop => false,
        SearchPath::Auto => kprime.len() as u128 <= q_order,
    };
    if use_kprime {
        let inv_h = phi_h.inverse();
        for p in kprime {
            let target = p.mul(&inv_h);
            let word = match &chain {
                Some(chain) => chain.constructive_membership(&target)?,
                None => target.is_identity().then(Vec::new),
            };
            if let Some(word) = word {
                let d_part = braid_of_label_word(n, &lifts, &word);
                return Ok(Some(d_part.concat(h)?));
            }
        }
    } else {
        let elements = match &chain {
            Some(chain) => chain.elements(),
            None => vec![(Permutation::identity(phi_h.degree()), Vec::new())],
        };
        for (q, word) in elements {
            if kprime.contains(&q.mul(phi_h)) {
                let d_part = braid_of_label_word(n, &lifts, &word);
                return Ok(Some(d_part.concat(h)?));
            }
        }
    }
    Ok(None)
}

fn lift_through_integers(
    d_gens: &[BraidWord],
    triple: &PreimageTriple,
    z_h: i64,
    h: &BraidWord,
) -> Result<Option<BraidWord>> {
    if z_h == 0 {
        return Ok(Some(h.clone()));
    }
    let n = h.strands();
    let mut images: Vec<i64> = Vec::new();
    let mut lifts: Vec<BraidWord> = Vec::new();
    for d in d_gens {
        let z = phi_int(triple, d)?;
        if z != 0 {
            images.push(z);
            lifts.push(d.clone());
        }
    }
    let Some((g, expression)) = gcd_with_expression(&images) else {
        return Ok(None);
    };
    if z_h % g != 0 {
        return Ok(None);
    }
    let scale = -z_h / g;
    let word: LabelWord =
        expression.into_iter().map(|(label, c)| (label, c * scale)).collect();
    let d_part = braid_of_label_word(n, &lifts, &word);
    Ok(Some(d_part.concat(h)?))
}

/// Greatest common divisor of the inputs with an expressing combination:
/// returns `(g, [(index, c)])` with `g = sum of c * images[index]`, `g > 0`.
/// `None` when every input is zero (or there are none).
fn gcd_with_expression(images: &[i64]) -> Option<(i64, Vec<(usize, i64)>)> {
    let mut g: i64 = 0;
    let mut expression: Vec<(usize, i64)> = Vec::new();
    for (index, &z) in images.iter().enumerate() {
        if z == 0 {
            continue;
        }
        if g == 0 {
            g = z.abs();
            expression = vec![(index, z.signum())];
            continue;
        }
        if z % g == 0 {
            continue;
        }
        let (d, x, y) = extended_gcd(g, z);
        for entry in &mut expression {
            entry.1 *= x;
        }
        expression.push((index, y));
        g = d;
    }
    (g != 0).then_some((g, expression))
}

/// `(d, x, y)` with `d = gcd(a, b) > 0` and `d = x*a + y*b`.
fn extended_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        return (a.abs(), a.signum(), 0);
    }
    let (d, x, y) = extended_gcd(b, a % b);
    (d, y, x - (a / b) * y)
}

/// Decides conjugacy in `H = phi^-1(K')` over the given ambient group:
/// first in the ambient group, then lifting the conjugator into `H`.
pub fn conjugate_in_subgroup(
    parent: &GroupContext,
    triple: &PreimageTriple,
    a: &BraidWord,
    b: &BraidWord,
) -> Result<Option<ConjugacyCertificate>> {
    parent.subgroup(triple.clone())?.conjugate(a, b)
}

/// A finite generating set for the centralizer of `a` inside `H`, by
/// Schreier's lemma over the finite-index subgroup `phi^-1(Q') ∩ C_G(a)` of
/// `C_G(a)`, where `Q' = phi(C_G(a)) ∩ K'`.
pub fn subgroup_centralizer(
    parent: &GroupContext,
    triple: &PreimageTriple,
    a: &BraidWord,
) -> Result<Vec<BraidWord>> {
    parent.subgroup(triple.clone())?.centralizer(a)
}

fn centralizer_core(
    parent: &GroupContext,
    triple: &PreimageTriple,
    a: &BraidWord,
) -> Result<Vec<BraidWord>> {
    let d_gens = parent.centralizer_members(a)?;
    match (&triple.phi, &triple.kprime) {
        (PhiMap::SymmetricProjection, KPrime::PermSet(set)) => {
            permutation_centralizer(&d_gens, triple, set, a.strands())
        }
        (_, KPrime::ZeroOnly) => {
            let mut images = Vec::with_capacity(d_gens.len());
            for d in &d_gens {
                images.push(phi_int(triple, d)?);
            }
            integer_centralizer(&d_gens, &images)
        }
        _ => Err(Error::InvalidArgument("mismatched map and target subgroup".into())),
    }
}

/// The integer backend: the preimage of `{0}` has finite index in the
/// centralizer only when the whole centralizer already maps to zero.
fn integer_centralizer(d_gens: &[BraidWord], images: &[i64]) -> Result<Vec<BraidWord>> {
    if images.iter().all(|&z| z == 0) {
        Ok(d_gens.to_vec())
    } else {
        Err(Error::InfiniteIndex)
    }
}

fn permutation_centralizer(
    d_gens: &[BraidWord],
    triple: &PreimageTriple,
    kprime: &BTreeSet<Permutation>,
    strands: usize,
) -> Result<Vec<BraidWord>> {
    let degree = kprime.iter().next().map(Permutation::degree).unwrap_or(strands);
    let mut labeled: Vec<(BraidWord, Permutation)> = Vec::with_capacity(d_gens.len());
    for d in d_gens {
        labeled.push((d.clone(), phi_perm(triple, d)?));
    }
    // Enumerate Q = phi(C_G(a)) and its subgroup Q' = Q ∩ K'.
    let distinct: Vec<Permutation> = {
        let mut seen = Vec::new();
        for (_, image) in &labeled {
            if !image.is_identity() && !seen.contains(image) {
                seen.push(image.clone());
            }
        }
        seen
    };
    let q_elements: Vec<Permutation> = if distinct.is_empty() {
        vec![Permutation::identity(degree)]
    } else {
        build_chain(&distinct)?.elements().into_iter().map(|(p, _)| p).collect()
    };
    let q_prime: Vec<Permutation> =
        q_elements.iter().filter(|q| kprime.contains(q)).cloned().collect();
    let coset_key = |t: &Permutation| -> Permutation {
        q_prime.iter().map(|p| p.mul(t)).min().expect("Q' contains the identity")
    };
    // Breadth-first transversal of the right cosets of Q' in Q, with braid
    // lifts assembled from the same centralizer generators that move between
    // the cosets.
    let identity = Permutation::identity(degree);
    let mut transversal: BTreeMap<Permutation, (Permutation, BraidWord)> = BTreeMap::new();
    transversal.insert(coset_key(&identity), (identity, BraidWord::identity(strands)));
    let mut queue: Vec<Permutation> = vec![coset_key(&Permutation::identity(degree))];
    let mut head = 0;
    while head < queue.len() {
        let (t, w_t) = transversal[&queue[head]].clone();
        head += 1;
        for (d, image) in &labeled {
            let next = t.mul(image);
            let key = coset_key(&next);
            if !transversal.contains_key(&key) {
                let word = w_t.concat(d).expect("same strand count");
                transversal.insert(key.clone(), (next, word));
                queue.push(key);
            }
        }
    }
    // Schreier generators: t * d * (representative of the landing coset)^-1.
    let mut seen: HashSet<NormalForm> = HashSet::new();
    let mut out = Vec::new();
    for key in &queue {
        let (t, w_t) = transversal[key].clone();
        for (d, image) in &labeled {
            let landing = coset_key(&t.mul(image));
            let (_, w_rep) = &transversal[&landing];
            let g = w_t
                .concat(d)
                .and_then(|w| w.concat(&w_rep.inverse()))
                .expect("same strand count");
            let nf = g.normal_form();
            if nf.is_identity() || !seen.insert(nf) {
                continue;
            }
            debug_assert!(kprime.contains(&phi_perm(triple, &g).expect("images of products")));
            out.push(g);
        }
    }
    Ok(out)
}

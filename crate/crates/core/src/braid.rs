//! Braid words and the Garside left normal form.
//!
//! Elements of the braid group on `n` strands are free words in the Artin
//! generators; letter `i > 0` is the positive crossing of strands at
//! positions `i, i + 1`, and `-i` its inverse.  The normal form is
//! `D^p f_1 ... f_l` where `D` is the half twist, every factor is a simple
//! element (permutation braid, encoded by its permutation), and each adjacent
//! pair is left-weighted.  Negative letters are rewritten through
//! `s^-1 = D^-1 (D s^-1)` before normalization.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A free word in the braid generators of `B_n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidArgument("a braid needs at least one strand".into()));
        }
        for &letter in &letters {
            if letter == 0 || letter.unsigned_abs() as usize >= strands {
                return Err(Error::InvalidLetter { letter, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord { strands, letters: Vec::new() }
    }

    /// Parses whitespace-separated signed integers, e.g. `"1 2 -1"`.
    /// An empty or all-whitespace string is the identity.
    pub fn parse(strands: usize, input: &str) -> Result<Self> {
        let letters: Vec<i32> = input
            .split_whitespace()
            .map(|t| {
                t.parse::<i32>()
                    .map_err(|_| Error::Parse { what: "braid word", input: input.to_string() })
            })
            .collect::<Result<_>>()?;
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn inverse(&self) -> Self {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch(self.strands, other.strands));
        }
        let mut letters = self.letters.clone();
        letters.extend(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// `h^-1 * self * h`.
    pub fn conjugated_by(&self, h: &Self) -> Result<Self> {
        h.inverse().concat(self)?.concat(h)
    }

    /// Sum of letter signs; a conjugacy invariant.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    /// The image in the symmetric group: each letter contributes its
    /// transposition, composed left to right, signs ignored.
    pub fn strand_permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.strands);
        for &letter in &self.letters {
            let t = Permutation::adjacent_transposition(self.strands, letter.unsigned_abs() as usize);
            p = p.mul(&t);
        }
        p
    }

    pub fn normal_form(&self) -> NormalForm {
        let mut acc = NormalForm::identity(self.strands);
        for &letter in &self.letters {
            let step = if letter > 0 {
                NormalForm::from_parts(
                    self.strands,
                    0,
                    vec![Permutation::adjacent_transposition(self.strands, letter as usize)],
                )
            } else {
                let t = Permutation::adjacent_transposition(self.strands, (-letter) as usize);
                NormalForm::from_parts(self.strands, -1, vec![left_complement(&t)])
            };
            acc = acc.mul_unchecked(&step);
        }
        acc
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, letter) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}[{}]", self.strands, self)
    }
}

/// Word-problem equality via normal forms.
pub fn equals(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    if u.strands() != v.strands() {
        return Err(Error::StrandMismatch(u.strands(), v.strands()));
    }
    Ok(u.normal_form() == v.normal_form())
}

/// The Garside left normal form `D^inf f_1 ... f_l`.
///
/// Factors are simple elements stored as permutations; no factor is the
/// identity or the half twist, and every adjacent pair is left-weighted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm {
    strands: usize,
    inf: i64,
    factors: Vec<Permutation>,
}

impl NormalForm {
    pub fn identity(strands: usize) -> Self {
        NormalForm { strands, inf: 0, factors: Vec::new() }
    }

    pub fn delta_power(strands: usize, power: i64) -> Self {
        NormalForm { strands, inf: power, factors: Vec::new() }
    }

    /// Normalizes an arbitrary `D^inf * (product of permutation factors)`.
    pub(crate) fn from_parts(strands: usize, inf: i64, factors: Vec<Permutation>) -> Self {
        normalize(strands, inf, factors)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn inf(&self) -> i64 {
        self.inf
    }

    pub fn sup(&self) -> i64 {
        self.inf + self.factors.len() as i64
    }

    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch(self.strands, other.strands));
        }
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let mut factors: Vec<Permutation> = if other.inf.rem_euclid(2) == 1 {
            self.factors.iter().map(flip).collect()
        } else {
            self.factors.clone()
        };
        factors.extend(other.factors.iter().cloned());
        normalize(self.strands, self.inf + other.inf, factors)
    }

    pub fn inverse(&self) -> Self {
        let mut acc = NormalForm::identity(self.strands);
        for f in self.factors.iter().rev() {
            let piece = NormalForm::from_parts(self.strands, -1, vec![left_complement(f)]);
            acc = acc.mul_unchecked(&piece);
        }
        acc.mul_unchecked(&NormalForm::delta_power(self.strands, -self.inf))
    }

    /// A braid word spelling this element: the half-twist power followed by
    /// one positive word per factor.
    pub fn to_word(&self) -> BraidWord {
        let mut letters = Vec::new();
        let delta = word_of_simple(&Permutation::half_twist(self.strands));
        if self.inf >= 0 {
            for _ in 0..self.inf {
                letters.extend(&delta);
            }
        } else {
            let delta_inv: Vec<i32> = delta.iter().rev().map(|&l| -l).collect();
            for _ in 0..-self.inf {
                letters.extend(&delta_inv);
            }
        }
        for f in &self.factors {
            letters.extend(word_of_simple(f));
        }
        BraidWord { strands: self.strands, letters }
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{}", self.inf)?;
        for (i, factor) in self.factors.iter().enumerate() {
            write!(f, "{}{}", if i == 0 { " . " } else { " | " }, factor)?;
        }
        Ok(())
    }
}

impl fmt::Debug for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Conjugation by the half twist: `flip(p) = w p w` with `w(i) = n + 1 - i`.
pub(crate) fn flip(p: &Permutation) -> Permutation {
    let n = p.degree();
    let images: Vec<usize> = (0..n).map(|x| n - 1 - p.images()[n - 1 - x]).collect();
    Permutation::from_images(images).expect("flip of a bijection is a bijection")
}

/// The simple element `t` with `t * s = D`; as a permutation, the half twist
/// followed by `s^-1` under left-to-right composition.
pub(crate) fn left_complement(s: &Permutation) -> Permutation {
    let n = s.degree();
    let s_inv = s.inverse();
    let images: Vec<usize> = (0..n).map(|x| s_inv.images()[n - 1 - x]).collect();
    Permutation::from_images(images).expect("complement of a bijection is a bijection")
}

/// Spells a simple element as a positive word, repeatedly emitting its
/// smallest starting generator.
pub(crate) fn word_of_simple(p: &Permutation) -> Vec<i32> {
    let n = p.degree();
    let mut letters = Vec::new();
    let mut images = p.images().to_vec();
    loop {
        let mut emitted = false;
        for i in 0..n.saturating_sub(1) {
            if images[i] > images[i + 1] {
                letters.push((i + 1) as i32);
                images.swap(i, i + 1);
                emitted = true;
                break;
            }
        }
        if !emitted {
            return letters;
        }
    }
}

/// Makes the pair `(a, b)` left-weighted by moving initial generators of `b`
/// that `a` does not finish with across the boundary.  Returns whether
/// anything moved.
fn left_weight_pair(a: &mut Permutation, b: &mut Permutation) -> bool {
    let n = a.degree();
    let mut a_inv = a.inverse();
    let mut changed = false;
    loop {
        let mut moved = false;
        for i in 0..n - 1 {
            let b_starts_here = b.images()[i] > b.images()[i + 1];
            let a_finishes_here = a_inv.images()[i] > a_inv.images()[i + 1];
            if b_starts_here && !a_finishes_here {
                let (pa, pb) = (a_inv.images()[i], a_inv.images()[i + 1]);
                a.images_mut().swap(pa, pb);
                a_inv.images_mut().swap(i, i + 1);
                b.images_mut().swap(i, i + 1);
                moved = true;
            }
        }
        if !moved {
            return changed;
        }
        changed = true;
    }
}

fn normalize(strands: usize, mut inf: i64, mut factors: Vec<Permutation>) -> NormalForm {
    factors.retain(|f| !f.is_identity());
    if factors.len() > 1 {
        loop {
            let mut changed = false;
            for j in 0..factors.len() - 1 {
                let (left, right) = factors.split_at_mut(j + 1);
                changed |= left_weight_pair(&mut left[j], &mut right[0]);
            }
            let before = factors.len();
            factors.retain(|f| !f.is_identity());
            changed |= factors.len() != before;
            if !changed || factors.len() < 2 {
                break;
            }
        }
    }
    let half_twist = Permutation::half_twist(strands);
    let leading = factors.iter().take_while(|f| **f == half_twist).count();
    if leading > 0 {
        inf += leading as i64;
        factors.drain(..leading);
    }
    NormalForm { strands, inf, factors }
}

/// Signed count of crossings selected by `count_pair`, which receives the
/// 1-based starting positions of the two strands meeting at each letter.
pub(crate) fn signed_crossings<F: Fn(usize, usize) -> bool>(w: &BraidWord, count_pair: F) -> i64 {
    let n = w.strands();
    let mut strand_at: Vec<usize> = (1..=n).collect();
    let mut total = 0i64;
    for &letter in w.letters() {
        let i = letter.unsigned_abs() as usize - 1;
        let (x, y) = (strand_at[i], strand_at[i + 1]);
        if count_pair(x, y) {
            total += letter.signum() as i64;
        }
        strand_at.swap(i, i + 1);
    }
    total
}

//! Conjugacy decisions in the braid group via super summit sets.
//!
//! Cycling and decycling drive any element to a representative of maximal
//! half-twist power and minimal canonical length among its conjugates; the
//! set of all such representatives is closed under conjugation by simple
//! elements and connected by single simple-element steps, so a breadth-first
//! search decides conjugacy and yields an explicit conjugating word.

use std::collections::HashMap;
use std::collections::HashSet;

use itertools::Itertools;

use crate::braid::{flip, left_complement, word_of_simple, BraidWord, NormalForm};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A verified-or-verifiable witness that `conjugator` takes `a` to `b`.
#[derive(Clone, Debug)]
pub struct ConjugacyCertificate {
    pub a: BraidWord,
    pub b: BraidWord,
    pub conjugator: BraidWord,
}

impl ConjugacyCertificate {
    /// Re-checks `conjugator^-1 * a * conjugator = b` through the word
    /// problem; independent of how the certificate was produced.
    pub fn verify(&self) -> Result<bool> {
        let conjugated = self.a.conjugated_by(&self.conjugator)?;
        crate::braid::equals(&conjugated, &self.b)
    }
}

/// The set of conjugates of `base` with maximal `inf` and minimal `sup`,
/// together with the conjugation graph discovered while enumerating it.
///
/// `to_vertex[i]` conjugates `base` to `vertices[i]`; `arrows` holds every
/// triple `(u, s, v)` with `s^-1 * vertices[u] * s = vertices[v]` for a
/// simple element `s`.
#[derive(Clone, Debug)]
pub struct SummitSet {
    pub base: NormalForm,
    pub vertices: Vec<NormalForm>,
    pub to_vertex: Vec<BraidWord>,
    pub arrows: Vec<(usize, Permutation, usize)>,
}

/// Every non-identity simple element of `B_n`, in a fixed order.
pub(crate) fn all_simples(n: usize) -> Vec<Permutation> {
    (0..n)
        .permutations(n)
        .map(|images| Permutation::from_images(images).expect("permutation of 0..n"))
        .filter(|p| !p.is_identity())
        .collect()
}

/// `s^-1 * x * s` for a simple element `s`.
pub(crate) fn conj_by_simple(x: &NormalForm, s: &Permutation) -> NormalForm {
    let n = x.strands();
    let s_inv = NormalForm::from_parts(n, -1, vec![left_complement(s)]);
    let s_nf = NormalForm::from_parts(n, 0, vec![s.clone()]);
    s_inv.mul(x).expect("same strand count").mul(&s_nf).expect("same strand count")
}

fn simple_word(n: usize, s: &Permutation) -> BraidWord {
    BraidWord::new(n, word_of_simple(s)).expect("simple words use valid letters")
}

/// Removes the first factor: `D^p f_1 ... f_l` conjugated by the simple
/// element `t^-p(f_1)` becomes `D^p f_2 ... f_l t^-p(f_1)`.  Returns the new
/// element and the conjugating word; identity on elements with no factors.
pub fn cycling(x: &NormalForm) -> (NormalForm, BraidWord) {
    let n = x.strands();
    if x.canonical_length() == 0 {
        return (x.clone(), BraidWord::identity(n));
    }
    let mut conjugator = x.factors()[0].clone();
    if x.inf().rem_euclid(2) == 1 {
        conjugator = flip(&conjugator);
    }
    let mut factors: Vec<Permutation> = x.factors()[1..].to_vec();
    factors.push(conjugator.clone());
    (NormalForm::from_parts(n, x.inf(), factors), simple_word(n, &conjugator))
}

/// Moves the last factor to the front: `D^p f_1 ... f_l` conjugated by
/// `f_l^-1` becomes `D^p t^p(f_l) f_1 ... f_{l-1}`.
pub fn decycling(x: &NormalForm) -> (NormalForm, BraidWord) {
    let n = x.strands();
    if x.canonical_length() == 0 {
        return (x.clone(), BraidWord::identity(n));
    }
    let last = x.factors().last().expect("checked non-empty").clone();
    let mut front = last.clone();
    if x.inf().rem_euclid(2) == 1 {
        front = flip(&front);
    }
    let mut factors = vec![front];
    factors.extend_from_slice(&x.factors()[..x.canonical_length() - 1]);
    (NormalForm::from_parts(n, x.inf(), factors), simple_word(n, &last).inverse())
}

/// Repeats `step` until a full orbit at the current `(inf, sup)` closes with
/// no improvement; returns whether anything improved.
fn improve_until_stable(
    step: fn(&NormalForm) -> (NormalForm, BraidWord),
    x: &mut NormalForm,
    conjugator: &mut BraidWord,
) -> bool {
    if x.canonical_length() == 0 {
        return false;
    }
    let mut improved = false;
    let mut seen: HashSet<NormalForm> = HashSet::new();
    seen.insert(x.clone());
    loop {
        let (y, c) = step(x);
        *conjugator = conjugator.concat(&c).expect("same strand count");
        let better = y.inf() > x.inf() || y.sup() < x.sup();
        *x = y;
        if x.canonical_length() == 0 {
            return true;
        }
        if better {
            improved = true;
            seen.clear();
            seen.insert(x.clone());
        } else if !seen.insert(x.clone()) {
            return improved;
        }
    }
}

/// A conjugate of `a` with maximal `inf` and minimal `sup` over the whole
/// conjugacy class, plus a word conjugating `a` to it.  Alternates cycling
/// (raises `inf`) and decycling (lowers `sup`), each with orbit detection:
/// iterated cycling raises `inf` eventually unless `inf` is already maximal,
/// so a closed orbit without improvement certifies optimality.
pub fn summit_representative(a: &BraidWord) -> (NormalForm, BraidWord) {
    let mut x = a.normal_form();
    let mut conjugator = BraidWord::identity(a.strands());
    loop {
        let cycled = improve_until_stable(cycling, &mut x, &mut conjugator);
        let decycled = improve_until_stable(decycling, &mut x, &mut conjugator);
        if !cycled && !decycled {
            return (x, conjugator);
        }
    }
}

enum Search {
    Full,
    Target(NormalForm),
}

fn explore_summit(base: NormalForm, mode: Search) -> (SummitSet, Option<usize>) {
    let n = base.strands();
    let inf = base.inf();
    let sup = base.sup();
    let simples = all_simples(n);
    let mut vertices = vec![base.clone()];
    let mut to_vertex = vec![BraidWord::identity(n)];
    let mut index: HashMap<NormalForm, usize> = HashMap::new();
    index.insert(base.clone(), 0);
    let mut arrows = Vec::new();
    let mut found = match &mode {
        Search::Target(t) if *t == base => Some(0),
        _ => None,
    };
    let mut head = 0;
    while head < vertices.len() && found.is_none() {
        for s in &simples {
            let image = conj_by_simple(&vertices[head], s);
            if image.inf() != inf || image.sup() != sup {
                continue;
            }
            let next = match index.get(&image) {
                Some(&v) => v,
                None => {
                    let v = vertices.len();
                    index.insert(image.clone(), v);
                    vertices.push(image.clone());
                    let path = to_vertex[head]
                        .concat(&simple_word(n, s))
                        .expect("same strand count");
                    to_vertex.push(path);
                    if matches!(&mode, Search::Target(t) if *t == image) {
                        found = Some(v);
                    }
                    v
                }
            };
            arrows.push((head, s.clone(), next));
            if found.is_some() {
                break;
            }
        }
        head += 1;
    }
    (SummitSet { base, vertices, to_vertex, arrows }, found)
}

/// Enumerates the full summit set of `a` with its conjugation graph.
pub fn summit_set(a: &BraidWord) -> SummitSet {
    let (base, _) = summit_representative(a);
    explore_summit(base, Search::Full).0
}

/// Same enumeration starting from an element already known to be a summit
/// representative, keeping the caller's conjugator bookkeeping intact.
pub(crate) fn summit_set_from(base: NormalForm) -> SummitSet {
    explore_summit(base, Search::Full).0
}

/// Decides conjugacy in `B_n` and returns a verifying conjugator when the
/// answer is yes.  `Ok(None)` means the elements are genuinely not conjugate.
pub fn conjugate_in_braid_group(a: &BraidWord, b: &BraidWord) -> Result<Option<ConjugacyCertificate>> {
    if a.strands() != b.strands() {
        return Err(Error::StrandMismatch(a.strands(), b.strands()));
    }
    if a.exponent_sum() != b.exponent_sum() {
        return Ok(None);
    }
    if a.strand_permutation().cycle_type() != b.strand_permutation().cycle_type() {
        return Ok(None);
    }
    let (rep_a, x_a) = summit_representative(a);
    let (rep_b, x_b) = summit_representative(b);
    if rep_a.inf() != rep_b.inf() || rep_a.sup() != rep_b.sup() {
        return Ok(None);
    }
    let (set, found) = explore_summit(rep_a, Search::Target(rep_b));
    let Some(v) = found else {
        return Ok(None);
    };
    let conjugator = x_a
        .concat(&set.to_vertex[v])?
        .concat(&x_b.inverse())?;
    Ok(Some(ConjugacyCertificate { a: a.clone(), b: b.clone(), conjugator }))
}

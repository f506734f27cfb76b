//! Brute-force oracles: definitionally correct, deliberately unscalable.
//!
//! These exist so the main algorithms can be checked against exhaustive
//! search at small sizes, both in the test suite and from the CLI.  Each
//! search is guarded by an explicit size limit rather than left to run
//! forever.

use std::collections::BTreeSet;

use crate::braid::{BraidWord, NormalForm};
use crate::conjugacy::{all_simples, conj_by_simple, summit_representative};
use crate::error::{Error, Result};
use crate::perm::Permutation;

const MAX_SEARCH_WORDS: u64 = 2_000_000;

/// Optional filter on the underlying permutation of a candidate conjugator.
pub type MuPredicate<'a> = &'a dyn Fn(&Permutation) -> bool;

/// All words of exactly `len` letters in `B_n`, in a fixed odometer order
/// over the alphabet `1, -1, 2, -2, ...`.
pub fn words_of_length(n: usize, len: usize) -> impl Iterator<Item = BraidWord> {
    let m = 2 * n.saturating_sub(1) as u64;
    let total = if len == 0 { 1 } else { m.checked_pow(len as u32).unwrap_or(0) };
    (0..total).map(move |mut code| {
        let letters: Vec<i32> = (0..len)
            .map(|_| {
                let digit = (code % m) as i32;
                code /= m;
                let generator = digit / 2 + 1;
                if digit % 2 == 0 {
                    generator
                } else {
                    -generator
                }
            })
            .collect();
        BraidWord::new(n, letters).expect("alphabet letters are valid")
    })
}

fn search_budget(n: usize, max_len: usize) -> Result<()> {
    let m = 2 * n.saturating_sub(1) as u64;
    let mut total: u64 = 0;
    for len in 0..=max_len {
        let words = if len == 0 { 1 } else { m.checked_pow(len as u32).unwrap_or(u64::MAX) };
        total = total.saturating_add(words);
    }
    if total > MAX_SEARCH_WORDS {
        return Err(Error::SearchTooLarge(format!(
            "{total} candidate words exceed the {MAX_SEARCH_WORDS} search limit; \
             reduce the length bound or strand count"
        )));
    }
    Ok(())
}

/// Exhaustively searches for a word `c` of at most `max_len` letters with
/// `c^-1 a c = b`, optionally restricted to conjugators whose underlying
/// permutation satisfies `constraint`.  `None` means no witness up to the
/// bound, not non-conjugacy.
pub fn brute_conjugator(
    a: &BraidWord,
    b: &BraidWord,
    max_len: usize,
    constraint: Option<MuPredicate>,
) -> Result<Option<BraidWord>> {
    if a.strands() != b.strands() {
        return Err(Error::StrandMismatch(a.strands(), b.strands()));
    }
    search_budget(a.strands(), max_len)?;
    let nf_a = a.normal_form();
    let nf_b = b.normal_form();
    let mu_a = a.strand_permutation();
    let mu_b = b.strand_permutation();
    for len in 0..=max_len {
        for c in words_of_length(a.strands(), len) {
            let mu_c = c.strand_permutation();
            if let Some(pred) = constraint {
                if !pred(&mu_c) {
                    continue;
                }
            }
            if mu_c.inverse().mul(&mu_a).mul(&mu_c) != mu_b {
                continue;
            }
            let nf_c = c.normal_form();
            let conjugated = nf_c.inverse().mul(&nf_a)?.mul(&nf_c)?;
            if conjugated == nf_b {
                return Ok(Some(c));
            }
        }
    }
    Ok(None)
}

/// Normal forms of every conjugate `c^-1 a c` over the same candidate space
/// as [`brute_conjugator`]; `brute_conjugator(a, b, ...)` finds a witness
/// exactly when this set contains the normal form of `b`.
pub fn brute_conjugate_set(
    a: &BraidWord,
    max_len: usize,
    constraint: Option<MuPredicate>,
) -> Result<BTreeSet<NormalForm>> {
    search_budget(a.strands(), max_len)?;
    let nf_a = a.normal_form();
    let mut out = BTreeSet::new();
    for len in 0..=max_len {
        for c in words_of_length(a.strands(), len) {
            if let Some(pred) = constraint {
                if !pred(&c.strand_permutation()) {
                    continue;
                }
            }
            let nf_c = c.normal_form();
            out.insert(nf_c.inverse().mul(&nf_a)?.mul(&nf_c)?);
        }
    }
    Ok(out)
}

/// Ground truth for summit sets: starting from a summit representative,
/// closes under conjugation by every simple element, keeping the conjugates
/// that preserve the half-twist power and canonical length.
pub fn brute_summit_closure(a: &BraidWord) -> Result<BTreeSet<NormalForm>> {
    if a.strands() > 6 {
        return Err(Error::SearchTooLarge(format!(
            "closing under all {} simple elements of B_{} is out of reach",
            (1..=a.strands() as u64).product::<u64>(),
            a.strands()
        )));
    }
    let (rep, _) = summit_representative(a);
    let simples = all_simples(a.strands());
    let mut closure: BTreeSet<NormalForm> = BTreeSet::new();
    closure.insert(rep.clone());
    let mut queue = vec![rep.clone()];
    while let Some(u) = queue.pop() {
        for s in &simples {
            let v = conj_by_simple(&u, s);
            if v.inf() == rep.inf() && v.sup() == rep.sup() && closure.insert(v.clone()) {
                queue.push(v);
            }
        }
    }
    Ok(closure)
}

/// Every word of 1 to `max_len` letters commuting with `a`, in enumeration
/// order.
pub fn brute_commuting_words(a: &BraidWord, max_len: usize) -> Result<Vec<BraidWord>> {
    search_budget(a.strands(), max_len)?;
    let nf_a = a.normal_form();
    let mu_a = a.strand_permutation();
    let mut out = Vec::new();
    for len in 1..=max_len {
        for c in words_of_length(a.strands(), len) {
            let mu_c = c.strand_permutation();
            if mu_c.inverse().mul(&mu_a).mul(&mu_c) != mu_a {
                continue;
            }
            let nf_c = c.normal_form();
            if nf_c.inverse().mul(&nf_a)?.mul(&nf_c)? == nf_a {
                out.push(c);
            }
        }
    }
    Ok(out)
}

//! Centralizer generating sets in the braid group.
//!
//! The conjugation graph on the summit set of `a` encodes the whole
//! centralizer: with a spanning tree rooted at the summit representative,
//! every graph arrow `(u, s, v)` closes a loop whose word conjugates the
//! representative to itself.  Conjugating the loops back to `a` gives a
//! finite generating set of the centralizer of `a`.

use std::collections::HashSet;

use crate::braid::{word_of_simple, BraidWord, NormalForm};
use crate::conjugacy::{summit_representative, summit_set_from};

/// A finite generating set for the centralizer of `a` in its braid group.
/// Every returned word commutes with `a`; duplicates and trivial words are
/// pruned by normal-form equality.
pub fn centralizer_generators(a: &BraidWord) -> Vec<BraidWord> {
    let n = a.strands();
    let (rep, x) = summit_representative(a);
    let set = summit_set_from(rep);
    let x_inv = x.inverse();
    let mut seen: HashSet<NormalForm> = HashSet::new();
    let mut out = Vec::new();
    for (u, s, v) in &set.arrows {
        let step = BraidWord::new(n, word_of_simple(s)).expect("simple words are valid");
        let loop_word = set.to_vertex[*u]
            .concat(&step)
            .and_then(|w| w.concat(&set.to_vertex[*v].inverse()))
            .expect("same strand count");
        let g = x
            .concat(&loop_word)
            .and_then(|w| w.concat(&x_inv))
            .expect("same strand count");
        let nf = g.normal_form();
        if nf.is_identity() || !seen.insert(nf) {
            continue;
        }
        out.push(g);
    }
    out
}

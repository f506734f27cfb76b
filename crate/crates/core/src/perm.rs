//! Symmetric group arithmetic and constructive membership.
//!
//! Permutations act on the points `1..=n`.  Composition is read left to
//! right everywhere in this crate: `compose(p, q)` maps `i` to `q(p(i))`,
//! matching the order in which braid letters act on strand positions.
//! [`PermGroupChain`] is a deterministic stabilizer chain that remembers, for
//! every transversal representative, a word in the original generators, so
//! membership tests can return an explicit factorization.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `1..=n`, stored as a 0-based image table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// Builds a permutation from a 0-based image table, validating bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from a 1-based image list such as `[2, 1, 3]`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.iter().any(|&v| v == 0) {
            return Err(Error::InvalidPermutation(format!("{images:?}")));
        }
        Self::from_images(images.iter().map(|&v| v - 1).collect())
    }

    /// The transposition swapping points `i` and `i + 1` (1-based `i < n`).
    pub fn adjacent_transposition(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "transposition index {i} out of range for degree {n}");
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i - 1, i);
        Permutation { images }
    }

    /// The order-reversing permutation `i -> n + 1 - i`.
    pub fn half_twist(n: usize) -> Self {
        Permutation { images: (0..n).rev().collect() }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub(crate) fn images_mut(&mut self) -> &mut [usize] {
        &mut self.images
    }

    /// Image of a 1-based point.
    pub fn apply(&self, point: usize) -> Result<usize> {
        if point == 0 || point > self.degree() {
            return Err(Error::PointOutOfRange { point, degree: self.degree() });
        }
        Ok(self.images[point - 1] + 1)
    }

    /// Left-to-right composition: the result maps `i` to `other(self(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.mul(other))
    }

    pub(crate) fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation { images: self.images.iter().map(|&v| other.images[v]).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Whether every listed 1-based point is fixed.
    pub fn fixes<I: IntoIterator<Item = usize>>(&self, points: I) -> Result<bool> {
        let mut all = true;
        for point in points {
            if point == 0 || point > self.degree() {
                return Err(Error::PointOutOfRange { point, degree: self.degree() });
            }
            all &= self.images[point - 1] == point - 1;
        }
        Ok(all)
    }

    /// Cycle lengths in increasing order, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p];
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable();
        lengths
    }

    /// Smallest moved 0-based point, if any.
    pub(crate) fn first_moved_point(&self) -> Option<usize> {
        self.images.iter().enumerate().find(|&(i, &v)| i != v).map(|(i, _)| i)
    }

    /// Parses either a 1-based image list (`[2,1,3]`) or cycle notation
    /// (`(1 2)(3 4)`, cycles composed left to right).  `id` and `()` denote
    /// the identity.
    pub fn parse(input: &str, n: usize) -> Result<Self> {
        let s = input.trim();
        let bad = || Error::Parse { what: "permutation", input: input.to_string() };
        if s == "id" || s == "()" {
            return Ok(Self::identity(n));
        }
        if s.starts_with('[') {
            if !s.ends_with(']') {
                return Err(bad());
            }
            let body = &s[1..s.len() - 1];
            let images: Vec<usize> = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| bad()))
                .collect::<Result<_>>()?;
            if images.len() != n {
                return Err(bad());
            }
            return Self::from_one_based(&images);
        }
        if s.starts_with('(') {
            let mut result = Self::identity(n);
            for chunk in s.split(')') {
                let chunk = chunk.trim();
                if chunk.is_empty() {
                    continue;
                }
                let body = chunk.strip_prefix('(').ok_or_else(bad)?;
                let points: Vec<usize> = body
                    .split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse::<usize>().map_err(|_| bad()))
                    .collect::<Result<_>>()?;
                if points.iter().any(|&p| p == 0 || p > n) {
                    return Err(bad());
                }
                let mut images: Vec<usize> = (0..n).collect();
                for w in points.windows(2) {
                    images[w[0] - 1] = w[1] - 1;
                }
                if points.len() > 1 {
                    images[points[points.len() - 1] - 1] = points[0] - 1;
                }
                let cycle = Self::from_images(images)?;
                result = result.compose(&cycle)?;
            }
            return Ok(result);
        }
        Err(bad())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, &v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All permutations of `1..=n` fixing each point of `x` (1-based), in
/// lexicographic order of their image tables.
pub fn enumerate_sigma_x(n: usize, x: &std::collections::BTreeSet<usize>) -> Result<Vec<Permutation>> {
    for &point in x {
        if point == 0 || point > n {
            return Err(Error::PointOutOfRange { point, degree: n });
        }
    }
    let free: Vec<usize> = (0..n).filter(|p| !x.contains(&(p + 1))).collect();
    let mut out = Vec::new();
    let mut arrangement: Vec<usize> = free.clone();
    loop {
        let mut images: Vec<usize> = (0..n).collect();
        for (slot, &value) in free.iter().zip(arrangement.iter()) {
            images[*slot] = value;
        }
        out.push(Permutation { images });
        if !next_permutation(&mut arrangement) {
            break;
        }
    }
    out.sort();
    Ok(out)
}

fn next_permutation(values: &mut [usize]) -> bool {
    if values.len() < 2 {
        return false;
    }
    let mut i = values.len() - 1;
    while i > 0 && values[i - 1] >= values[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = values.len() - 1;
    while values[j] <= values[i - 1] {
        j -= 1;
    }
    values.swap(i - 1, j);
    values[i..].reverse();
    true
}

/// A word over generator indices; each entry is `(index, exponent)`.
pub type LabelWord = Vec<(usize, i64)>;

/// Evaluates a label word over the given generators.
pub fn evaluate_label_word(generators: &[Permutation], word: &LabelWord) -> Result<Permutation> {
    let degree = generators
        .first()
        .map(Permutation::degree)
        .ok_or_else(|| Error::InvalidArgument("no generators to evaluate over".into()))?;
    let mut acc = Permutation::identity(degree);
    for &(index, exponent) in word {
        let g = generators
            .get(index)
            .ok_or_else(|| Error::InvalidArgument(format!("generator index {index} out of range")))?;
        let step = if exponent < 0 { g.inverse() } else { g.clone() };
        for _ in 0..exponent.unsigned_abs() {
            acc = acc.compose(&step)?;
        }
    }
    Ok(acc)
}

pub fn invert_label_word(word: &LabelWord) -> LabelWord {
    word.iter().rev().map(|&(i, e)| (i, -e)).collect()
}

struct ChainLevel {
    base_point: usize,
    /// orbit point -> representative `u` with `u(base_point) = point`, plus its word.
    transversal: BTreeMap<usize, (Permutation, LabelWord)>,
    strong_gens: Vec<(Permutation, LabelWord)>,
}

/// A stabilizer chain over the supplied generators.
///
/// Transversal entries carry words over the generator indices, so
/// [`PermGroupChain::constructive_membership`] can hand back an explicit
/// factorization of any member.  Construction is deterministic: orbits are
/// extended in increasing point order and generators in supply order.
pub struct PermGroupChain {
    degree: usize,
    generators: Vec<Permutation>,
    levels: Vec<ChainLevel>,
}

impl PermGroupChain {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// The stabilized base points, 1-based.
    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point + 1).collect()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.transversal.len() as u128).product()
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        Ok(self.constructive_membership(p)?.is_some())
    }

    /// A word over the generator indices evaluating to `target`, if `target`
    /// belongs to the group.
    pub fn constructive_membership(&self, target: &Permutation) -> Result<Option<LabelWord>> {
        if target.degree() != self.degree {
            return Err(Error::DegreeMismatch(target.degree(), self.degree));
        }
        let mut residue = target.clone();
        let mut suffix: LabelWord = Vec::new();
        for level in &self.levels {
            let point = residue.images()[level.base_point];
            let Some((rep, word)) = level.transversal.get(&point) else {
                return Ok(None);
            };
            residue = residue.mul(&rep.inverse());
            let mut piece = word.clone();
            piece.extend(suffix);
            suffix = piece;
        }
        if residue.is_identity() {
            Ok(Some(suffix))
        } else {
            Ok(None)
        }
    }

    /// Every group element together with a defining word, transversal products
    /// taken deepest level first.
    pub fn elements(&self) -> Vec<(Permutation, LabelWord)> {
        let mut acc: Vec<(Permutation, LabelWord)> =
            vec![(Permutation::identity(self.degree), Vec::new())];
        for level in &self.levels {
            let mut next = Vec::with_capacity(acc.len() * level.transversal.len());
            for (_, (rep, word)) in &level.transversal {
                for (e, we) in &acc {
                    let mut combined = word.clone();
                    combined.extend(we.iter().copied());
                    next.push((rep.mul(e), combined));
                }
            }
            acc = next;
        }
        acc
    }

    fn sift(
        &self,
        from_level: usize,
        element: (Permutation, LabelWord),
    ) -> ((Permutation, LabelWord), usize) {
        let (mut residue, mut word) = element;
        for (offset, level) in self.levels[from_level..].iter().enumerate() {
            if residue.is_identity() {
                return ((residue, word), from_level + offset);
            }
            let point = residue.images()[level.base_point];
            let Some((rep, rep_word)) = level.transversal.get(&point) else {
                return ((residue, word), from_level + offset);
            };
            residue = residue.mul(&rep.inverse());
            word.extend(invert_label_word(rep_word));
        }
        ((residue, word), self.levels.len())
    }

    fn add_generator(&mut self, gen: (Permutation, LabelWord)) {
        let ((residue, word), at) = self.sift(0, gen);
        if residue.is_identity() {
            return;
        }
        self.store_strong_gen(at, residue, word);
        self.stabilize();
    }

    /// Records a sifted residue at the level it failed, creating the level if
    /// the sift ran off the end of the chain.
    fn store_strong_gen(&mut self, at: usize, residue: Permutation, word: LabelWord) -> bool {
        if at == self.levels.len() {
            let base_point = residue
                .first_moved_point()
                .expect("non-identity permutation moves a point");
            let mut transversal = BTreeMap::new();
            transversal.insert(base_point, (Permutation::identity(self.degree), Vec::new()));
            self.levels.push(ChainLevel { base_point, transversal, strong_gens: Vec::new() });
        }
        if self.levels[at].strong_gens.iter().any(|(s, _)| *s == residue) {
            return false;
        }
        self.levels[at].strong_gens.push((residue, word));
        true
    }

    /// Generators acting at `level`: everything stored at this level or
    /// deeper, since a generator stored deeper fixes this level's base point
    /// but can still extend its orbit through other points.
    fn gens_from(&self, level: usize) -> Vec<(Permutation, LabelWord)> {
        self.levels[level..].iter().flat_map(|l| l.strong_gens.iter().cloned()).collect()
    }

    /// Recomputes transversals and verifies Schreier generators until the
    /// whole chain is stable.
    fn stabilize(&mut self) {
        loop {
            let mut changed = false;
            let mut level = 0;
            while level < self.levels.len() {
                changed |= self.reclose(level);
                level += 1;
            }
            if !changed {
                return;
            }
        }
    }

    fn reclose(&mut self, level: usize) -> bool {
        let base_point = self.levels[level].base_point;
        let gens = self.gens_from(level);
        // Rebuild the orbit transversal by breadth-first search.
        let mut transversal: BTreeMap<usize, (Permutation, LabelWord)> = BTreeMap::new();
        transversal.insert(base_point, (Permutation::identity(self.degree), Vec::new()));
        let mut queue = vec![base_point];
        let mut head = 0;
        while head < queue.len() {
            let p = queue[head];
            head += 1;
            let (up, wp) = transversal[&p].clone();
            for (s, ws) in &gens {
                let q = s.images()[p];
                if !transversal.contains_key(&q) {
                    let mut word = wp.clone();
                    word.extend(ws.iter().copied());
                    transversal.insert(q, (up.mul(s), word));
                    queue.push(q);
                }
            }
        }
        let mut changed = transversal != self.levels[level].transversal;
        self.levels[level].transversal = transversal.clone();
        // Every Schreier generator of the stabilizer must sift to identity
        // through the deeper levels; residues become new strong generators.
        for (p, (up, wp)) in &transversal {
            for (s, ws) in &gens {
                let q = s.images()[*p];
                let (uq, wq) = &transversal[&q];
                let schreier = up.mul(s).mul(&uq.inverse());
                if schreier.is_identity() {
                    continue;
                }
                let mut word = wp.clone();
                word.extend(ws.iter().copied());
                word.extend(invert_label_word(wq));
                let ((residue, rword), at) = self.sift(level + 1, (schreier, word));
                if !residue.is_identity() {
                    changed |= self.store_strong_gen(at, residue, rword);
                }
            }
        }
        changed
    }
}

/// Builds a stabilizer chain for the group generated by `generators`.
/// Words returned by the chain refer to generators by their index here.
pub fn build_chain(generators: &[Permutation]) -> Result<PermGroupChain> {
    let degree = generators
        .first()
        .map(Permutation::degree)
        .ok_or_else(|| Error::InvalidArgument("cannot build a chain with no generators".into()))?;
    for g in generators {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch(g.degree(), degree));
        }
    }
    let mut chain = PermGroupChain { degree, generators: generators.to_vec(), levels: Vec::new() };
    for (index, g) in generators.iter().enumerate() {
        chain.add_generator((g.clone(), vec![(index, 1)]));
    }
    Ok(chain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;
    use std::collections::HashSet;

    fn perm(images: &[usize]) -> Permutation {
        Permutation::from_one_based(images).unwrap()
    }

    /// Independent oracle: the order of the generated group by plain closure.
    fn closure_order(gens: &[Permutation]) -> usize {
        let n = gens[0].degree();
        let mut seen: HashSet<Permutation> = HashSet::new();
        let mut queue = vec![Permutation::identity(n)];
        seen.insert(queue[0].clone());
        while let Some(p) = queue.pop() {
            for g in gens {
                let q = p.mul(g);
                if seen.insert(q.clone()) {
                    queue.push(q);
                }
            }
        }
        seen.len()
    }

    #[test]
    fn compose_is_left_to_right() {
        let p = perm(&[2, 1, 3]);
        let q = perm(&[1, 3, 2]);
        assert_eq!(p.compose(&q).unwrap(), perm(&[3, 1, 2]));
    }

    #[test]
    fn compose_degree_mismatch_errors() {
        let p = perm(&[2, 1]);
        let q = perm(&[1, 3, 2]);
        assert!(matches!(p.compose(&q), Err(Error::DegreeMismatch(2, 3))));
    }

    #[test]
    fn inverse_round_trip() {
        let p = perm(&[3, 1, 2]);
        assert_eq!(p.inverse(), perm(&[2, 3, 1]));
        assert!(p.compose(&p.inverse()).unwrap().is_identity());
        assert!(Permutation::identity(4).inverse().is_identity());
    }

    #[test]
    fn fixes_checks_points() {
        let p = perm(&[2, 1, 3]);
        assert!(p.fixes([3]).unwrap());
        assert!(!p.fixes([1]).unwrap());
        assert!(matches!(
            p.fixes([4]),
            Err(Error::PointOutOfRange { point: 4, degree: 3 })
        ));
        assert!(p.fixes(std::iter::empty()).unwrap());
    }

    #[test]
    fn display_and_parse_round_trip() {
        let p = perm(&[2, 1, 3]);
        assert_eq!(p.to_string(), "[2,1,3]");
        assert_eq!(Permutation::parse("[2,1,3]", 3).unwrap(), p);
        assert_eq!(Permutation::parse("(1 2)", 3).unwrap(), p);
        assert_eq!(Permutation::parse("(1 2)(3 4)", 4).unwrap(), perm(&[2, 1, 4, 3]));
        assert_eq!(Permutation::parse("id", 3).unwrap(), Permutation::identity(3));
        assert!(Permutation::parse("[2,2,3]", 3).is_err());
        assert!(Permutation::parse("(1 5)", 3).is_err());
    }

    #[test]
    fn cycle_type_sorted() {
        assert_eq!(perm(&[2, 1, 4, 3]).cycle_type(), vec![2, 2]);
        assert_eq!(perm(&[2, 3, 1, 4]).cycle_type(), vec![1, 3]);
        assert_eq!(Permutation::identity(3).cycle_type(), vec![1, 1, 1]);
    }

    #[test]
    fn sigma_x_enumeration() {
        let n3: BTreeSet<usize> = [3].into();
        let fix3 = enumerate_sigma_x(3, &n3).unwrap();
        assert_eq!(fix3, vec![Permutation::identity(3), perm(&[2, 1, 3])]);

        let all: BTreeSet<usize> = [1, 2, 3, 4].into();
        assert_eq!(enumerate_sigma_x(4, &all).unwrap(), vec![Permutation::identity(4)]);

        let empty = BTreeSet::new();
        let full = enumerate_sigma_x(3, &empty).unwrap();
        assert_eq!(full.len(), 6);
        let distinct: HashSet<_> = full.iter().cloned().collect();
        assert_eq!(distinct.len(), 6);
        assert!(full.windows(2).all(|w| w[0] < w[1]), "lexicographic order");

        let bad: BTreeSet<usize> = [9].into();
        assert!(enumerate_sigma_x(3, &bad).is_err());
    }

    #[test]
    fn chain_order_matches_brute_closure() {
        // Oracle first: closure order is computed without any chain machinery.
        let cases: Vec<Vec<Permutation>> = vec![
            (1..4).map(|i| Permutation::adjacent_transposition(4, i)).collect(),
            vec![
                Permutation::adjacent_transposition(4, 2),
                Permutation::adjacent_transposition(4, 3),
            ],
            vec![perm(&[2, 3, 1])],
            vec![Permutation::identity(3)],
            (1..5).map(|i| Permutation::adjacent_transposition(5, i)).collect(),
            vec![perm(&[2, 3, 4, 5, 1]), perm(&[2, 1, 3, 4, 5])],
        ];
        for gens in cases {
            let expected = closure_order(&gens) as u128;
            let chain = build_chain(&gens).unwrap();
            assert_eq!(chain.order(), expected);
        }
    }

    #[test]
    fn full_symmetric_group_has_order_24() {
        let gens: Vec<Permutation> =
            (1..4).map(|i| Permutation::adjacent_transposition(4, i)).collect();
        let chain = build_chain(&gens).unwrap();
        assert_eq!(chain.order(), 24);
    }

    #[test]
    fn identity_generators_give_trivial_group() {
        let chain = build_chain(&[Permutation::identity(4)]).unwrap();
        assert_eq!(chain.order(), 1);
        assert!(chain.contains(&Permutation::identity(4)).unwrap());
        assert!(!chain.contains(&perm(&[2, 1, 3, 4])).unwrap());
    }

    #[test]
    fn point_stabilizer_excludes_moving_elements() {
        let gens = vec![
            Permutation::adjacent_transposition(4, 2),
            Permutation::adjacent_transposition(4, 3),
        ];
        let chain = build_chain(&gens).unwrap();
        assert_eq!(chain.order(), 6);
        assert!(!chain.contains(&perm(&[2, 1, 3, 4])).unwrap());
    }

    #[test]
    fn membership_words_evaluate_to_target() {
        let gens: Vec<Permutation> =
            (1..4).map(|i| Permutation::adjacent_transposition(4, i)).collect();
        let chain = build_chain(&gens).unwrap();
        for (element, _) in chain.elements() {
            let word = chain.constructive_membership(&element).unwrap().unwrap();
            let rebuilt = evaluate_label_word(&gens, &word).unwrap();
            assert_eq!(rebuilt, element);
        }
    }

    #[test]
    fn transversal_words_reproduce_representatives() {
        let gens = vec![perm(&[2, 3, 4, 1]), perm(&[2, 1, 3, 4])];
        let chain = build_chain(&gens).unwrap();
        for level in &chain.levels {
            for (_, (rep, word)) in &level.transversal {
                assert_eq!(&evaluate_label_word(&gens, word).unwrap(), rep);
            }
        }
    }

    #[test]
    fn sifting_random_products_succeeds_and_nonmembers_fail() {
        let gens = vec![
            Permutation::adjacent_transposition(5, 2),
            Permutation::adjacent_transposition(5, 3),
            Permutation::adjacent_transposition(5, 4),
        ];
        let chain = build_chain(&gens).unwrap();
        assert_eq!(chain.order(), 24);
        let mut p = Permutation::identity(5);
        for step in 0..40usize {
            p = p.mul(&gens[step % 3]);
            let word = chain.constructive_membership(&p).unwrap().unwrap();
            assert_eq!(evaluate_label_word(&gens, &word).unwrap(), p);
        }
        assert!(chain
            .constructive_membership(&perm(&[2, 1, 3, 4, 5]))
            .unwrap()
            .is_none());
        assert!(matches!(
            chain.constructive_membership(&perm(&[2, 1, 3])),
            Err(Error::DegreeMismatch(3, 5))
        ));
    }

    #[test]
    fn elements_enumeration_is_complete() {
        let gens = vec![
            Permutation::adjacent_transposition(4, 2),
            Permutation::adjacent_transposition(4, 3),
        ];
        let chain = build_chain(&gens).unwrap();
        let elements = chain.elements();
        assert_eq!(elements.len() as u128, chain.order());
        let distinct: HashSet<_> = elements.iter().map(|(p, _)| p.clone()).collect();
        assert_eq!(distinct.len(), elements.len());
        for (p, word) in &elements {
            assert_eq!(&evaluate_label_word(&gens, word).unwrap(), p);
            assert!(p.fixes([1]).unwrap());
        }
    }
}

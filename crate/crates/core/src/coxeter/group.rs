use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::{Arc, RwLock};

use super::graph::{CoxeterGraph, EdgeOrder};
use crate::{Error, Result};

/// A word in the generators, as generator indices.
pub type Word = Vec<usize>;

/// A group element, stored as its ShortLex-least reduced word.
///
/// Elements compare in ShortLex order (length first, then lexicographic in
/// generator order), which is also a linear extension of the Bruhat order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Element(Word);

impl Element {
    pub fn identity() -> Self {
        Self(Vec::new())
    }

    pub fn word(&self) -> &[usize] {
        &self.0
    }

    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }
}

impl Ord for Element {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Element {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element{:?}", self.0)
    }
}

/// Elements grouped by length, as produced by [`CoxeterGroup::enumerate`].
#[derive(Debug, Clone)]
pub struct Enumeration {
    pub levels: Vec<Vec<Element>>,
    /// True when an empty length level was reached, i.e. the group is finite
    /// and every element is listed.
    pub finite: bool,
}

impl Enumeration {
    pub fn total(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    pub fn elements(&self) -> impl Iterator<Item = &Element> {
        self.levels.iter().flatten()
    }
}

/// A Coxeter group given by its graph, with memoized word canonicalization.
///
/// All operations on words go through braid-move closures: two reduced words
/// represent the same element iff one is reachable from the other by braid
/// moves, and a word is reduced iff no word in its closure has two equal
/// adjacent letters.
pub struct CoxeterGroup {
    graph: CoxeterGraph,
    normal_forms: RwLock<HashMap<Word, Element>>,
    closures: RwLock<HashMap<Element, Arc<Vec<Word>>>>,
}

impl fmt::Debug for CoxeterGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoxeterGroup").field("graph", &self.graph).finish_non_exhaustive()
    }
}

impl CoxeterGroup {
    pub fn new(graph: CoxeterGraph) -> Self {
        Self { graph, normal_forms: RwLock::default(), closures: RwLock::default() }
    }

    pub fn graph(&self) -> &CoxeterGraph {
        &self.graph
    }

    pub fn rank(&self) -> usize {
        self.graph.rank()
    }

    pub fn generator(&self, s: usize) -> Element {
        Element(vec![s])
    }

    pub fn format(&self, w: &Element) -> String {
        self.graph.format_word(w.word())
    }

    /// All words obtained from `word` by single braid moves at any position.
    fn braid_neighbours(&self, word: &[usize]) -> Vec<Word> {
        let mut out = Vec::new();
        for i in 0..word.len().saturating_sub(1) {
            let (a, b) = (word[i], word[i + 1]);
            if a == b {
                continue;
            }
            let EdgeOrder::Finite(m) = self.graph.order(a, b) else {
                continue;
            };
            let m = m as usize;
            if i + m > word.len() {
                continue;
            }
            let alternates = (0..m).all(|k| word[i + k] == if k % 2 == 0 { a } else { b });
            if alternates {
                let mut next = word.to_vec();
                for k in 0..m {
                    next[i + k] = if k % 2 == 0 { b } else { a };
                }
                out.push(next);
            }
        }
        out
    }

    /// Closure of `word` under braid moves; stops early and returns the
    /// offending word and position if some member has a repeated letter.
    fn closure_or_cancellation(&self, word: &[usize]) -> std::result::Result<Vec<Word>, (Word, usize)> {
        let mut seen: HashSet<Word> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(word.to_vec());
        queue.push_back(word.to_vec());
        while let Some(w) = queue.pop_front() {
            if let Some(i) = w.windows(2).position(|p| p[0] == p[1]) {
                return Err((w, i));
            }
            for next in self.braid_neighbours(&w) {
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        let mut all: Vec<Word> = seen.into_iter().collect();
        all.sort();
        Ok(all)
    }

    /// The canonical (ShortLex-least reduced) form of the element a word represents.
    pub fn normal_form(&self, word: &[usize]) -> Element {
        if let Some(e) = self.normal_forms.read().unwrap().get(word) {
            return e.clone();
        }
        let mut current = word.to_vec();
        let result = loop {
            if let Some(e) = self.normal_forms.read().unwrap().get(&current) {
                break e.clone();
            }
            match self.closure_or_cancellation(&current) {
                Ok(closure) => {
                    let canonical = Element(closure[0].clone());
                    let mut memo = self.normal_forms.write().unwrap();
                    for w in &closure {
                        memo.insert(w.clone(), canonical.clone());
                    }
                    drop(memo);
                    self.closures.write().unwrap().insert(canonical.clone(), Arc::new(closure));
                    break canonical;
                }
                Err((w, i)) => {
                    current = w;
                    current.drain(i..i + 2);
                }
            }
        };
        self.normal_forms.write().unwrap().insert(word.to_vec(), result.clone());
        result
    }

    pub fn is_reduced(&self, word: &[usize]) -> bool {
        self.normal_form(word).length() == word.len()
    }

    /// Every reduced word of the element represented by the reduced word `word`.
    pub fn braid_closure(&self, word: &[usize]) -> Result<BTreeSet<Word>> {
        if word.iter().any(|&s| s >= self.rank()) {
            return Err(Error::Precondition("letter outside the generating set".into()));
        }
        if !self.is_reduced(word) {
            return Err(Error::NotReduced);
        }
        let element = self.normal_form(word);
        Ok(self.reduced_words(&element).iter().cloned().collect())
    }

    /// Reduced words of a canonical element, sorted lexicographically.
    pub fn reduced_words(&self, w: &Element) -> Arc<Vec<Word>> {
        if let Some(c) = self.closures.read().unwrap().get(w) {
            return Arc::clone(c);
        }
        self.normal_form(w.word());
        Arc::clone(self.closures.read().unwrap().get(w).expect("closure cached by normal_form"))
    }

    /// Product with a length cap, which guards against blow-up in infinite groups.
    pub fn multiply(&self, a: &Element, b: &Element, cap: usize) -> Result<Element> {
        if a.length() + b.length() > cap {
            return Err(Error::CapExceeded { cap });
        }
        let mut word = a.0.clone();
        word.extend_from_slice(&b.0);
        Ok(self.normal_form(&word))
    }

    pub fn left_mul_gen(&self, s: usize, w: &Element) -> Element {
        let mut word = Vec::with_capacity(w.length() + 1);
        word.push(s);
        word.extend_from_slice(&w.0);
        self.normal_form(&word)
    }

    pub fn right_mul_gen(&self, w: &Element, s: usize) -> Element {
        let mut word = w.0.clone();
        word.push(s);
        self.normal_form(&word)
    }

    pub fn inverse(&self, w: &Element) -> Element {
        let word: Word = w.0.iter().rev().copied().collect();
        self.normal_form(&word)
    }

    pub fn is_left_descent(&self, s: usize, w: &Element) -> bool {
        self.reduced_words(w).iter().any(|u| u.first() == Some(&s))
    }

    pub fn is_right_descent(&self, w: &Element, s: usize) -> bool {
        self.reduced_words(w).iter().any(|u| u.last() == Some(&s))
    }

    /// Left and right descent sets.
    pub fn descents(&self, w: &Element) -> (BTreeSet<usize>, BTreeSet<usize>) {
        let words = self.reduced_words(w);
        let left = words.iter().filter_map(|u| u.first().copied()).collect();
        let right = words.iter().filter_map(|u| u.last().copied()).collect();
        (left, right)
    }

    /// Bruhat order by the descent recursion: with `s` a left descent of `w`,
    /// `y <= w` iff `sy <= sw` (when `sy < y`) or `y <= sw` (when `sy > y`).
    pub fn bruhat_leq(&self, y: &Element, w: &Element) -> bool {
        let (mut y, mut w) = (y.clone(), w.clone());
        loop {
            if y.length() > w.length() {
                return false;
            }
            if y.is_identity() || y == w {
                return true;
            }
            if y.length() == w.length() {
                return false;
            }
            // The first letter of a canonical word is a left descent.
            let s = w.0[0];
            let sw = self.normal_form(&w.0[1..]);
            let sy = self.left_mul_gen(s, &y);
            if sy.length() < y.length() {
                y = sy;
            }
            w = sw;
        }
    }

    /// Subword criterion: `y <= w` iff `y` is the product of some subword of a
    /// reduced word of `w`. Exponential in `l(w)`; meant as a cross-check.
    pub fn bruhat_leq_subword(&self, y: &Element, w: &Element) -> bool {
        let word = w.word();
        let n = word.len();
        assert!(n < 24, "subword enumeration is exponential in the length");
        (0u32..1 << n).any(|mask| {
            if mask.count_ones() as usize != y.length() {
                return false;
            }
            let sub: Word = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| word[i]).collect();
            self.normal_form(&sub) == *y
        })
    }

    /// Breadth-first enumeration by length up to `length_cap`, stopping early
    /// once more than `size_cap` elements are found.
    pub fn enumerate(&self, length_cap: usize, size_cap: usize) -> Enumeration {
        let mut levels = vec![vec![Element::identity()]];
        let mut total = 1;
        loop {
            let last = levels.last().expect("nonempty");
            let k = levels.len() - 1;
            let mut next = BTreeSet::new();
            for w in last {
                for s in 0..self.rank() {
                    if self.is_right_descent(w, s) {
                        continue;
                    }
                    next.insert(self.right_mul_gen(w, s));
                }
            }
            if next.is_empty() {
                return Enumeration { levels, finite: true };
            }
            if k == length_cap || total + next.len() > size_cap {
                return Enumeration { levels, finite: false };
            }
            total += next.len();
            levels.push(next.into_iter().collect());
        }
    }

    pub fn unique_reduced_expression(&self, w: &Element) -> bool {
        self.reduced_words(w).len() == 1
    }

    /// `r t r ...` with `k` factors.
    pub fn alternating_word(&self, r: usize, t: usize, k: usize) -> Result<Element> {
        if r == t {
            return Err(Error::Precondition("alternating word needs two distinct generators".into()));
        }
        if let EdgeOrder::Finite(m) = self.graph.order(r, t) {
            if k > m as usize {
                return Err(Error::NotReduced);
            }
        }
        let word: Word = (0..k).map(|i| if i % 2 == 0 { r } else { t }).collect();
        Ok(self.normal_form(&word))
    }

    pub fn element_from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Element> {
        Ok(self.normal_form(&self.graph.parse_word(labels)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dihedral(m: u32) -> CoxeterGroup {
        CoxeterGroup::new(CoxeterGraph::dihedral(EdgeOrder::Finite(m)).unwrap())
    }

    const R: usize = 0;
    const T: usize = 1;

    #[test]
    fn closure_examples() {
        let d3 = dihedral(3);
        let rtr: BTreeSet<Word> = [vec![R, T, R], vec![T, R, T]].into_iter().collect();
        assert_eq!(d3.braid_closure(&[R, T, R]).unwrap(), rtr);
        assert_eq!(d3.braid_closure(&[R]).unwrap().len(), 1);
        assert_eq!(d3.braid_closure(&[R, R]), Err(Error::NotReduced));
        let a3 = CoxeterGroup::new(CoxeterGraph::type_a(3));
        let commuting: BTreeSet<Word> = [vec![0, 2], vec![2, 0]].into_iter().collect();
        assert_eq!(a3.braid_closure(&[0, 2]).unwrap(), commuting);
    }

    #[test]
    fn normal_form_examples() {
        let d3 = dihedral(3);
        assert!(d3.normal_form(&[R, R]).is_identity());
        assert_eq!(d3.normal_form(&[T, R, T]).word(), &[R, T, R]);
        assert_eq!(d3.normal_form(&[R, T, R, T]).word(), &[T, R]);
    }

    #[test]
    fn multiply_examples() {
        let d3 = dihedral(3);
        let e = Element::identity();
        let w = d3.normal_form(&[R, T]);
        assert_eq!(d3.multiply(&e, &w, 10).unwrap(), w);
        assert!(d3.multiply(&d3.generator(R), &d3.generator(R), 10).unwrap().is_identity());
        let tr = d3.normal_form(&[T, R]);
        assert!(d3.multiply(&w, &tr, 10).unwrap().is_identity());
        assert_eq!(d3.multiply(&w, &tr, 3), Err(Error::CapExceeded { cap: 3 }));
    }

    #[test]
    fn descent_examples() {
        let d3 = dihedral(3);
        let (l, r) = d3.descents(&Element::identity());
        assert!(l.is_empty() && r.is_empty());
        let w0 = d3.normal_form(&[R, T, R]);
        assert_eq!(d3.descents(&w0).0, [R, T].into_iter().collect());
        assert_eq!(d3.descents(&d3.normal_form(&[R, T])).0, [R].into_iter().collect());
    }

    #[test]
    fn bruhat_examples() {
        let d3 = dihedral(3);
        let tr = d3.normal_form(&[T, R]);
        assert!(d3.bruhat_leq(&Element::identity(), &tr));
        assert!(d3.bruhat_leq(&d3.generator(R), &tr));
        assert!(!d3.bruhat_leq(&tr, &d3.normal_form(&[R, T])));
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(dihedral(2).enumerate(20, 2000).level_sizes(), vec![1, 2, 1]);
        let d3 = dihedral(3).enumerate(20, 2000);
        assert_eq!(d3.level_sizes(), vec![1, 2, 2, 1]);
        assert!(d3.finite);
        let a3 = CoxeterGroup::new(CoxeterGraph::type_a(3)).enumerate(20, 2000);
        assert_eq!(a3.total(), 24);
        let inf = CoxeterGroup::new(CoxeterGraph::dihedral(EdgeOrder::Infinite).unwrap()).enumerate(5, 2000);
        assert!(!inf.finite);
        assert_eq!(inf.level_sizes(), vec![1, 2, 2, 2, 2, 2]);
        // Length exactly at the cap still detects finiteness.
        assert!(dihedral(3).enumerate(3, 2000).finite);
    }

    #[test]
    fn unique_and_alternating() {
        let d3 = dihedral(3);
        assert!(d3.unique_reduced_expression(&d3.generator(T)));
        let w0 = d3.alternating_word(R, T, 3).unwrap();
        assert!(!d3.unique_reduced_expression(&w0));
        assert!(d3.unique_reduced_expression(&Element::identity()));
        assert!(d3.alternating_word(R, T, 0).unwrap().is_identity());
        assert_eq!(d3.alternating_word(R, T, 2).unwrap().word(), &[R, T]);
        assert_eq!(w0, d3.alternating_word(T, R, 3).unwrap());
        assert_eq!(d3.alternating_word(R, T, 4), Err(Error::NotReduced));
    }
}

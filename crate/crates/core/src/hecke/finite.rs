use std::collections::HashMap;

use crate::coxeter::{CoxeterGraph, CoxeterGroup, Element};
use crate::{Error, Result};

/// Enumeration limits for treating a group as finite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub length: usize,
    pub size: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self { length: 12, size: 2000 }
    }
}

/// A fully enumerated finite Coxeter group with multiplication-by-generator
/// tables and the Bruhat order, all indexed by element ids.
///
/// Ids follow ShortLex order, so `l(a) < l(b)` implies `a < b`.
#[derive(Debug)]
pub struct FiniteGroup {
    group: CoxeterGroup,
    elements: Vec<Element>,
    index: HashMap<Element, usize>,
    left: Vec<Vec<usize>>,
    right: Vec<Vec<usize>>,
    bruhat: Vec<Vec<bool>>,
}

impl FiniteGroup {
    pub fn new(graph: CoxeterGraph, caps: Caps) -> Result<Self> {
        let group = CoxeterGroup::new(graph);
        let enumeration = group.enumerate(caps.length, caps.size);
        if !enumeration.finite {
            return Err(Error::NotFinite);
        }
        let elements: Vec<Element> = enumeration.elements().cloned().collect();
        let index: HashMap<Element, usize> =
            elements.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        let rank = group.rank();
        let left = (0..rank)
            .map(|s| elements.iter().map(|w| index[&group.left_mul_gen(s, w)]).collect())
            .collect();
        let right = (0..rank)
            .map(|s| elements.iter().map(|w| index[&group.right_mul_gen(w, s)]).collect())
            .collect();
        let mut fg = Self { group, elements, index, left, right, bruhat: Vec::new() };
        fg.bruhat = fg.bruhat_table();
        Ok(fg)
    }

    /// `bruhat[y][w]` by the left-descent recursion, filled in id order.
    fn bruhat_table(&self) -> Vec<Vec<bool>> {
        let n = self.len();
        let mut leq = vec![vec![false; n]; n];
        leq[0][0] = true;
        for w in 1..n {
            let s = self.elements[w].word()[0];
            let sw = self.left[s][w];
            for y in 0..n {
                if self.length(y) > self.length(w) {
                    break;
                }
                let sy = self.left[s][y];
                leq[y][w] = if y == w {
                    true
                } else if self.length(sy) < self.length(y) {
                    leq[sy][sw]
                } else {
                    leq[y][sw]
                };
            }
        }
        leq
    }

    pub fn group(&self) -> &CoxeterGroup {
        &self.group
    }

    pub fn graph(&self) -> &CoxeterGraph {
        self.group.graph()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.group.rank()
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn element(&self, id: usize) -> &Element {
        &self.elements[id]
    }

    pub fn id(&self, w: &Element) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn length(&self, id: usize) -> usize {
        self.elements[id].length()
    }

    pub fn left_mul(&self, s: usize, id: usize) -> usize {
        self.left[s][id]
    }

    pub fn right_mul(&self, id: usize, s: usize) -> usize {
        self.right[s][id]
    }

    pub fn is_left_descent(&self, s: usize, id: usize) -> bool {
        self.length(self.left[s][id]) < self.length(id)
    }

    pub fn bruhat_leq(&self, y: usize, w: usize) -> bool {
        self.bruhat[y][w]
    }

    /// Id of the longest element.
    pub fn longest(&self) -> usize {
        self.len() - 1
    }

    pub fn name(&self, id: usize) -> String {
        self.group.format(&self.elements[id])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::EdgeOrder;

    #[test]
    fn tables() {
        let fg = FiniteGroup::new(CoxeterGraph::dihedral(EdgeOrder::Finite(4)).unwrap(), Caps::default()).unwrap();
        assert_eq!(fg.len(), 8);
        assert_eq!(fg.length(fg.longest()), 4);
        for id in 0..fg.len() {
            for s in 0..2 {
                assert_eq!(fg.left_mul(s, fg.left_mul(s, id)), id);
            }
            assert!(fg.bruhat_leq(0, id));
            assert!(fg.bruhat_leq(id, fg.longest()));
        }
        let inf = CoxeterGraph::dihedral(EdgeOrder::Infinite).unwrap();
        assert_eq!(FiniteGroup::new(inf, Caps::default()).unwrap_err(), Error::NotFinite);
    }
}

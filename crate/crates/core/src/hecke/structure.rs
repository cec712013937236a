use std::collections::BTreeMap;

use super::algebra::{dense_mul_gen, dense_zero, Dense, Side};
use super::finite::FiniteGroup;
use super::kl::{to_c_basis, KlTable};
use crate::arith::LaurentPoly;

/// All `h_{x,y,w}` with `C_x C_y = sum_w h_{x,y,w} C_w`, stored sparsely in `w`.
#[derive(Debug, Clone)]
pub struct StructureConstants {
    n: usize,
    products: Vec<BTreeMap<usize, LaurentPoly>>,
}

impl StructureConstants {
    /// Multiplies every pair `C_x C_y` in the `T~` basis and re-expands in the
    /// `C` basis.
    pub fn compute(fg: &FiniteGroup, kl: &KlTable) -> Self {
        let n = fg.len();
        let c: Vec<Dense> = (0..n).map(|w| kl.c_basis_dense(fg, w)).collect();
        let mut products = vec![BTreeMap::new(); n * n];
        for y in 0..n {
            // tc[z] = T~_z C_y, built as T~_s (T~_{sz} C_y) in id order.
            let mut tc: Vec<Dense> = Vec::with_capacity(n);
            tc.push(c[y].clone());
            for z in 1..n {
                let s = fg.element(z).word()[0];
                let sz = fg.left_mul(s, z);
                tc.push(dense_mul_gen(fg, s, &tc[sz], Side::Left));
            }
            for x in 0..n {
                let mut prod = dense_zero(n);
                for (z, a) in c[x].iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    for (u, b) in tc[z].iter().enumerate() {
                        if !b.is_zero() {
                            prod[u] += &(a * b);
                        }
                    }
                }
                products[x * n + y] = to_c_basis(fg, kl, prod).into_iter().collect();
            }
        }
        Self { n, products }
    }

    pub fn get(&self, x: usize, y: usize, w: usize) -> LaurentPoly {
        self.products[x * self.n + y].get(&w).cloned().unwrap_or_default()
    }

    /// Nonzero `h_{x,y,w}` for fixed `x, y`.
    pub fn product(&self, x: usize, y: usize) -> &BTreeMap<usize, LaurentPoly> {
        &self.products[x * self.n + y]
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Nonzero entries `(x, y, w, h)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &LaurentPoly)> {
        let n = self.n;
        self.products
            .iter()
            .enumerate()
            .flat_map(move |(xy, m)| m.iter().map(move |(&w, h)| (xy / n, xy % n, w, h)))
    }

    /// Entries violating `(-1)^i c_i >= 0`.
    pub fn sign_violations(&self) -> Vec<(usize, usize, usize)> {
        self.entries()
            .filter(|(_, _, _, h)| !h.is_sign_alternating())
            .map(|(x, y, w, _)| (x, y, w))
            .collect()
    }

    /// `a(w) = max(0, -min_{x,y} lowdeg h_{x,y,w})`.
    pub fn a_value(&self, w: usize) -> u32 {
        self.entries()
            .filter(|&(_, _, z, _)| z == w)
            .map(|(_, _, _, h)| h.lowest_degree().expect("stored entries are nonzero"))
            .map(|d| (-d).max(0) as u32)
            .max()
            .unwrap_or(0)
    }

    /// The a-function on every element, indexed by id.
    pub fn a_values(&self) -> AValueReport {
        let mut a = vec![0u32; self.n];
        for (_, _, w, h) in self.entries() {
            let d = h.lowest_degree().expect("stored entries are nonzero");
            a[w] = a[w].max((-d).max(0) as u32);
        }
        AValueReport { values: a }
    }
}

/// The a-function value of every element, indexed by element id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AValueReport {
    pub values: Vec<u32>,
}

impl AValueReport {
    pub fn get(&self, id: usize) -> u32 {
        self.values[id]
    }

    /// JSON object keyed by canonical word strings, in ShortLex order.
    pub fn to_json(&self, fg: &FiniteGroup) -> serde_json::Value {
        let map = self
            .values
            .iter()
            .enumerate()
            .map(|(id, &a)| (fg.name(id), serde_json::Value::from(a)))
            .collect::<serde_json::Map<_, _>>();
        serde_json::Value::Object(map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{CoxeterGraph, EdgeOrder};
    use crate::hecke::Caps;

    #[test]
    fn generator_square() {
        let fg = FiniteGroup::new(CoxeterGraph::dihedral(EdgeOrder::Finite(3)).unwrap(), Caps::default()).unwrap();
        let kl = KlTable::compute(&fg);
        let h = StructureConstants::compute(&fg, &kl);
        let s = fg.id(&fg.group().generator(0)).unwrap();
        let mut expected = LaurentPoly::monomial(-1, 1);
        expected.add_term(-1, (-1).into());
        assert_eq!(h.get(s, s, s), expected);
        assert_eq!(h.product(s, s).len(), 1);
        for y in 0..fg.len() {
            let unit: BTreeMap<usize, LaurentPoly> = [(y, LaurentPoly::one())].into_iter().collect();
            assert_eq!(h.product(0, y), &unit);
        }
        assert!(h.sign_violations().is_empty());
        let a = h.a_values();
        assert_eq!(a.values, vec![0, 1, 1, 1, 1, 3]);
    }
}

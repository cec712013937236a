use num_bigint::BigInt;
use num_traits::One;

use super::algebra::{dense_to_element, dense_zero, Dense, HeckeElement};
use super::finite::FiniteGroup;
use crate::arith::{IntPoly, LaurentPoly};
use crate::coxeter::Element;

/// Kazhdan–Lusztig polynomials `P_{y,w}` and the `mu` coefficients of a
/// finite group, indexed by element ids of the owning [`FiniteGroup`].
#[derive(Debug, Clone)]
pub struct KlTable {
    p: Vec<Vec<Option<IntPoly>>>,
    mu: Vec<Vec<i64>>,
}

impl KlTable {
    /// Fills `P_{y,w}` for every Bruhat pair by the standard recursion. With
    /// `s` a left descent of `w`, `v = sw`, `c = 1` if `sy < y` else `0`:
    ///
    /// `P_{y,w} = q^{1-c} P_{sy,v} + q^c P_{y,v}
    ///            - sum_{y <= z < v, sz < z} mu(z,v) q^{(l(w)-l(z))/2} P_{y,z}`.
    pub fn compute(fg: &FiniteGroup) -> Self {
        let n = fg.len();
        let mut table = Self { p: vec![vec![None; n]; n], mu: vec![vec![0; n]; n] };
        table.p[0][0] = Some(IntPoly::one());
        for w in 1..n {
            let s = fg.element(w).word()[0];
            let v = fg.left_mul(s, w);
            let lw = fg.length(w);
            // z with sz < z and mu(z, v) != 0 contribute to the correction.
            let corrections: Vec<(usize, i64)> = (0..v)
                .filter(|&z| fg.is_left_descent(s, z) && table.mu[z][v] != 0)
                .map(|z| (z, table.mu[z][v]))
                .collect();
            for y in 0..=w {
                if !fg.bruhat_leq(y, w) {
                    continue;
                }
                let sy = fg.left_mul(s, y);
                let c = u32::from(fg.length(sy) < fg.length(y));
                let mut p = &table.poly(sy, v).shift(1 - c) + &table.poly(y, v).shift(c);
                for &(z, mu) in &corrections {
                    if !fg.bruhat_leq(y, z) {
                        continue;
                    }
                    let shift = ((lw - fg.length(z)) / 2) as u32;
                    let term = table.poly(y, z).shift(shift);
                    p = &p - &(&term * &IntPoly::monomial(mu, 0));
                }
                table.p[y][w] = Some(p);
            }
            for y in 0..w {
                let diff = lw - fg.length(y);
                if diff % 2 == 1 {
                    if let Some(p) = &table.p[y][w] {
                        let top = p.coeff(((diff - 1) / 2) as u32);
                        table.mu[y][w] = i64::try_from(top).expect("mu fits in i64");
                    }
                }
            }
        }
        table
    }

    /// `P_{y,w}`, zero unless `y <= w`.
    pub fn poly(&self, y: usize, w: usize) -> IntPoly {
        self.p[y][w].clone().unwrap_or_default()
    }

    pub fn mu(&self, y: usize, w: usize) -> i64 {
        self.mu[y][w]
    }

    pub fn len(&self) -> usize {
        self.p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p.is_empty()
    }

    /// Bruhat pairs `(y, w)` with their polynomial.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &IntPoly)> {
        self.p.iter().enumerate().flat_map(|(y, row)| {
            row.iter().enumerate().filter_map(move |(w, p)| p.as_ref().map(|p| (y, w, p)))
        })
    }

    /// Violations of: `P_{w,w} = 1`, constant term 1, nonnegative
    /// coefficients, and `deg P_{y,w} <= (l(w) - l(y) - 1)/2` for `y < w`.
    pub fn invariant_violations(&self, fg: &FiniteGroup) -> Vec<String> {
        let mut out = Vec::new();
        for (y, w, p) in self.entries() {
            let name = || format!("P({}, {})", fg.name(y), fg.name(w));
            if y == w {
                if *p != IntPoly::one() {
                    out.push(format!("{} = {p} is not 1", name()));
                }
                continue;
            }
            if !p.coeff(0).is_one() {
                out.push(format!("{} = {p} has constant term != 1", name()));
            }
            if !p.has_nonnegative_coeffs() {
                out.push(format!("{} = {p} has a negative coefficient", name()));
            }
            let diff = fg.length(w) - fg.length(y);
            if p.degree().is_some_and(|d| 2 * d as usize + 1 > diff) {
                out.push(format!("{} = {p} exceeds the degree bound", name()));
            }
        }
        for y in 0..self.len() {
            for w in 0..self.len() {
                if self.mu[y][w] < 0 {
                    out.push(format!("mu({}, {}) < 0", fg.name(y), fg.name(w)));
                }
            }
        }
        out
    }

    /// `C_w = sum_y (-1)^{l(w)+l(y)} q^{(l(w)-l(y))/2} P_{y,w}(q^{-1}) T~_y`
    /// as a dense vector over element ids.
    pub(crate) fn c_basis_dense(&self, fg: &FiniteGroup, w: usize) -> Dense {
        let mut out = dense_zero(fg.len());
        let lw = fg.length(w) as i32;
        for (y, slot) in out.iter_mut().enumerate().take(w + 1) {
            let Some(p) = &self.p[y][w] else {
                continue;
            };
            let d = lw - fg.length(y) as i32;
            let sign = if d % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            for (k, c) in p.terms() {
                slot.add_term(d - 2 * k as i32, &sign * c);
            }
        }
        out
    }

    /// The Kazhdan–Lusztig basis element `C_w` in the `T~` basis.
    pub fn c_basis(&self, fg: &FiniteGroup, w: &Element) -> Option<HeckeElement> {
        let id = fg.id(w)?;
        Some(dense_to_element(fg, &self.c_basis_dense(fg, id)))
    }
}

/// Re-expands a dense `T~`-combination in the `C` basis by peeling off the
/// longest remaining support element; `C_z = T~_z + (shorter terms)`.
pub(crate) fn to_c_basis(fg: &FiniteGroup, kl: &KlTable, mut h: Dense) -> Vec<(usize, LaurentPoly)> {
    let mut out = Vec::new();
    while let Some(z) = (0..h.len()).rev().find(|&z| !h[z].is_zero()) {
        let a = std::mem::take(&mut h[z]);
        let cz = kl.c_basis_dense(fg, z);
        for (y, c) in cz.iter().enumerate().take(z) {
            if !c.is_zero() {
                h[y] -= &(c * &a);
            }
        }
        out.push((z, a));
    }
    out.reverse();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{CoxeterGraph, EdgeOrder};
    use crate::hecke::Caps;

    fn dihedral(m: u32) -> FiniteGroup {
        FiniteGroup::new(CoxeterGraph::dihedral(EdgeOrder::Finite(m)).unwrap(), Caps::default()).unwrap()
    }

    #[test]
    fn dihedral_polynomials_are_one() {
        for m in 2..=7 {
            let fg = dihedral(m);
            let kl = KlTable::compute(&fg);
            for y in 0..fg.len() {
                for w in 0..fg.len() {
                    let expected = if fg.bruhat_leq(y, w) { IntPoly::one() } else { IntPoly::zero() };
                    assert_eq!(kl.poly(y, w), expected);
                }
            }
            assert!(kl.invariant_violations(&fg).is_empty());
        }
    }

    #[test]
    fn c_basis_examples() {
        let fg = dihedral(2);
        let kl = KlTable::compute(&fg);
        let g = fg.group();
        let ce = kl.c_basis(&fg, &Element::identity()).unwrap();
        assert_eq!(ce, HeckeElement::t(Element::identity()));

        let cs = kl.c_basis(&fg, &g.generator(0)).unwrap();
        let mut expected = HeckeElement::t(g.generator(0));
        expected.add_term(Element::identity(), &-LaurentPoly::v());
        assert_eq!(cs, expected);

        let w0 = g.normal_form(&[0, 1]);
        let c = kl.c_basis(&fg, &w0).unwrap();
        let mut expected = HeckeElement::t(w0);
        expected.add_term(g.generator(0), &-LaurentPoly::v());
        expected.add_term(g.generator(1), &-LaurentPoly::v());
        expected.add_term(Element::identity(), &LaurentPoly::monomial(1, 2));
        assert_eq!(c, expected);
    }

    #[test]
    fn a3_nontrivial_polynomial() {
        let fg = FiniteGroup::new(CoxeterGraph::type_a(3), Caps::default()).unwrap();
        let kl = KlTable::compute(&fg);
        let g = fg.group();
        let y = fg.id(&g.generator(1)).unwrap();
        let w = fg.id(&g.normal_form(&[1, 0, 2, 1])).unwrap();
        assert_eq!(kl.poly(y, w), IntPoly::from_coeffs([1, 1]));
        assert_eq!(kl.mu(y, w), 1);
        assert!(kl.invariant_violations(&fg).is_empty());
    }

    #[test]
    fn reexpansion_inverts_c_basis() {
        let fg = dihedral(4);
        let kl = KlTable::compute(&fg);
        for w in 0..fg.len() {
            let expansion = to_c_basis(&fg, &kl, kl.c_basis_dense(&fg, w));
            assert_eq!(expansion, vec![(w, LaurentPoly::one())]);
        }
    }
}

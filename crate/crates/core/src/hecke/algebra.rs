use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::finite::FiniteGroup;
use crate::arith::LaurentPoly;
use crate::coxeter::{CoxeterGroup, Element};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Element of the Hecke algebra in the normalized standard basis `T~_w`,
/// over `Z[v, v^{-1}]` with `v = q^{1/2}`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct HeckeElement {
    terms: BTreeMap<Element, LaurentPoly>,
}

impl HeckeElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis element `T~_w`.
    pub fn t(w: Element) -> Self {
        let mut h = Self::zero();
        h.add_term(w, &LaurentPoly::one());
        h
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Element) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Element, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, w: Element, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        for (w, a) in &self.terms {
            out.add_term(w.clone(), &(a * c));
        }
        out
    }

    /// Multiplication by `T~_s` on the given side:
    /// `T~_s T~_w = T~_{sw}` if `l(sw) > l(w)`, else `(v - v^{-1}) T~_w + T~_{sw}`.
    pub fn t_mul_gen(&self, group: &CoxeterGroup, s: usize, side: Side) -> Self {
        let quad = LaurentPoly::v_minus_vinv();
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            let sw = match side {
                Side::Left => group.left_mul_gen(s, w),
                Side::Right => group.right_mul_gen(w, s),
            };
            if sw.length() < w.length() {
                out.add_term(w.clone(), &(&quad * c));
            }
            out.add_term(sw, c);
        }
        out
    }

    /// Full product `self * other`, expanding each `T~_w` of `self` as a
    /// product of generators.
    pub fn mul(&self, other: &Self, group: &CoxeterGroup) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            let mut acc = other.clone();
            for &s in w.word().iter().rev() {
                acc = acc.t_mul_gen(group, s, Side::Left);
            }
            out = out.add(&acc.scale(c));
        }
        out
    }

    /// Specialization `v -> 1`: a formal integer combination of group elements.
    pub fn specialize_q1(&self) -> BTreeMap<Element, BigInt> {
        self.terms
            .iter()
            .map(|(w, c)| (w.clone(), c.evaluate_at_one()))
            .filter(|(_, c)| *c != BigInt::from(0))
            .collect()
    }
}

/// Dense Hecke element over a finite group: coefficient per element id.
pub(crate) type Dense = Vec<LaurentPoly>;

pub(crate) fn dense_zero(n: usize) -> Dense {
    vec![LaurentPoly::zero(); n]
}

pub(crate) fn dense_mul_gen(fg: &FiniteGroup, s: usize, h: &[LaurentPoly], side: Side) -> Dense {
    let quad = LaurentPoly::v_minus_vinv();
    let mut out = dense_zero(h.len());
    for (u, c) in h.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let su = match side {
            Side::Left => fg.left_mul(s, u),
            Side::Right => fg.right_mul(u, s),
        };
        if fg.length(su) < fg.length(u) {
            out[u] += &(&quad * c);
        }
        out[su] += c;
    }
    out
}

pub(crate) fn dense_to_element(fg: &FiniteGroup, h: &[LaurentPoly]) -> HeckeElement {
    let mut out = HeckeElement::zero();
    for (id, c) in h.iter().enumerate() {
        out.add_term(fg.element(id).clone(), c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{CoxeterGraph, EdgeOrder};

    #[test]
    fn generator_rule() {
        let g = CoxeterGroup::new(CoxeterGraph::dihedral(EdgeOrder::Finite(3)).unwrap());
        let e = HeckeElement::t(Element::identity());
        let ts = e.t_mul_gen(&g, 0, Side::Left);
        assert_eq!(ts, HeckeElement::t(g.generator(0)));

        let tss = ts.t_mul_gen(&g, 0, Side::Left);
        let mut expected = HeckeElement::t(Element::identity());
        expected.add_term(g.generator(0), &LaurentPoly::v_minus_vinv());
        assert_eq!(tss, expected);

        let trt = HeckeElement::t(g.generator(1)).t_mul_gen(&g, 0, Side::Left);
        assert_eq!(trt, HeckeElement::t(g.normal_form(&[0, 1])));
        let right = HeckeElement::t(g.generator(0)).t_mul_gen(&g, 1, Side::Right);
        assert_eq!(right, HeckeElement::t(g.normal_form(&[0, 1])));
    }
}

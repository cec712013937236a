//! Hecke algebra in the normalized standard basis, Kazhdan–Lusztig
//! polynomials and basis, structure constants, Lusztig's a-function, two-sided
//! cells and cell representations at `q = 1`.
//!
//! Everything except [`HeckeElement`] needs a finite group: the a-function is
//! defined by a sweep over all pairs `x, y`, which has no finite certificate
//! for infinite groups.

mod algebra;
mod cells;
mod finite;
mod kl;
mod structure;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

pub use algebra::{HeckeElement, Side};
pub use cells::{cell_rep_matrices, CellPartition};
pub use finite::{Caps, FiniteGroup};
pub use kl::KlTable;
pub use structure::{AValueReport, StructureConstants};

use crate::coxeter::{CoxeterGraph, Element};
use crate::Result;

/// Everything computed for a finite group, in dependency order.
#[derive(Debug)]
pub struct KlData {
    pub group: FiniteGroup,
    pub kl: KlTable,
}

impl KlData {
    pub fn new(graph: CoxeterGraph, caps: Caps) -> Result<Self> {
        let group = FiniteGroup::new(graph, caps)?;
        let kl = KlTable::compute(&group);
        Ok(Self { group, kl })
    }

    pub fn structure_constants(&self) -> StructureConstants {
        StructureConstants::compute(&self.group, &self.kl)
    }

    pub fn cells(&self) -> CellPartition {
        CellPartition::compute(&self.group, &self.kl)
    }

    pub fn c_basis(&self, w: &Element) -> Option<HeckeElement> {
        self.kl.c_basis(&self.group, w)
    }

    /// `C_w` at `q = 1`: `sum_y (-1)^{l(w)+l(y)} P_{y,w}(1) y`.
    pub fn specialized_c_basis(&self, w: &Element) -> Option<BTreeMap<Element, BigInt>> {
        self.c_basis(w).map(|c| c.specialize_q1())
    }

    /// `C_w` at `q = 1` for the element with id `w`, as `{"y": coefficient}`
    /// over the support in ShortLex order.
    pub fn specialized_json(&self, w: usize) -> serde_json::Value {
        let fg = &self.group;
        let c = self.specialized_c_basis(fg.element(w)).expect("id of an enumerated element");
        let map = c
            .iter()
            .filter(|(_, n)| !n.is_zero())
            .map(|(y, n)| (fg.group().format(y), crate::arith::bigint_to_json(n)))
            .collect::<serde_json::Map<_, _>>();
        serde_json::Value::Object(map)
    }

    /// `{"elements": [...], "P": {"y|w": poly}, "mu": {"y|w": n}}`, polynomials
    /// as degree-string to integer maps in `q`.
    pub fn kl_json(&self) -> serde_json::Value {
        let fg = &self.group;
        let mut p = serde_json::Map::new();
        let mut mu = serde_json::Map::new();
        for (y, w, poly) in self.kl.entries() {
            let key = format!("{}|{}", fg.name(y), fg.name(w));
            p.insert(key.clone(), poly.to_json());
            let m = self.kl.mu(y, w);
            if m != 0 {
                mu.insert(key, m.into());
            }
        }
        let elements: Vec<String> = (0..fg.len()).map(|id| fg.name(id)).collect();
        serde_json::json!({"elements": elements, "P": p, "mu": mu})
    }

    /// `{"x|y": {"w": laurent}}` for every nonzero product.
    pub fn structure_json(&self, h: &StructureConstants) -> serde_json::Value {
        let fg = &self.group;
        let mut out = serde_json::Map::new();
        for x in 0..fg.len() {
            for y in 0..fg.len() {
                let terms = h
                    .product(x, y)
                    .iter()
                    .map(|(&w, c)| (fg.name(w), c.to_json()))
                    .collect::<serde_json::Map<_, _>>();
                out.insert(format!("{}|{}", fg.name(x), fg.name(y)), serde_json::Value::Object(terms));
            }
        }
        serde_json::Value::Object(out)
    }
}

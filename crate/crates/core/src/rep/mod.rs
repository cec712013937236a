//! Finite-dimensional matrix representations of Coxeter groups: relation
//! checks, `-1`-eigenspaces, the a-value-1 criterion and its equivalent
//! `C_{w_rt}`-annihilation form, and the R-representation predicate.

use crate::coxeter::CoxeterGraph;
use crate::dihedral::cwrt_action;
use crate::linalg::{scalar_to_json, Matrix, Vector};
use crate::{Error, Result};

/// A representation given by one matrix per generator, all over
/// `Q(zeta_conductor)`; conductor 1 is the rational field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixRep {
    graph: CoxeterGraph,
    conductor: u32,
    dim: usize,
    matrices: Vec<Matrix>,
}

impl MatrixRep {
    /// Checks shapes and fields, not relations.
    pub fn new(graph: CoxeterGraph, matrices: Vec<Matrix>) -> Result<Self> {
        if matrices.len() != graph.rank() {
            return Err(Error::DimensionMismatch(format!(
                "{} matrices for {} generators",
                matrices.len(),
                graph.rank()
            )));
        }
        let dim = matrices[0].rows();
        let conductor = matrices[0].conductor();
        if dim == 0 {
            return Err(Error::DimensionMismatch("representation of dimension 0".into()));
        }
        for (s, m) in matrices.iter().enumerate() {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "matrix of `{}` is {}x{}, expected {dim}x{dim}",
                    graph.label(s),
                    m.rows(),
                    m.cols()
                )));
            }
            if m.conductor() != conductor {
                return Err(Error::ConductorMismatch(conductor, m.conductor()));
            }
        }
        Ok(Self { graph, conductor, dim, matrices })
    }

    /// Every generator acting as the identity.
    pub fn trivial(graph: CoxeterGraph, dim: usize, conductor: u32) -> Self {
        let matrices = vec![Matrix::identity(dim, conductor); graph.rank()];
        Self { graph, conductor, dim, matrices }
    }

    /// Every generator acting as `-1`.
    pub fn sign(graph: CoxeterGraph, conductor: u32) -> Self {
        let matrices = vec![Matrix::from_int_rows(conductor, &[[-1]]); graph.rank()];
        Self { graph, conductor, dim: 1, matrices }
    }

    pub fn graph(&self) -> &CoxeterGraph {
        &self.graph
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self, s: usize) -> &Matrix {
        &self.matrices[s]
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    pub fn identity(&self) -> Matrix {
        Matrix::identity(self.dim, self.conductor)
    }

    pub fn promote(&self, conductor: u32) -> Result<Self> {
        let matrices = self.matrices.iter().map(|m| m.promote(conductor)).collect::<Result<_>>()?;
        Ok(Self { graph: self.graph.clone(), conductor, dim: self.dim, matrices })
    }

    /// Block-diagonal sum, over the common field.
    pub fn direct_sum(&self, other: &MatrixRep) -> Result<Self> {
        if self.graph != other.graph {
            return Err(Error::Precondition("direct sum of representations of different groups".into()));
        }
        let n = lcm(self.conductor, other.conductor);
        let (a, b) = (self.promote(n)?, other.promote(n)?);
        let matrices = a.matrices.iter().zip(&b.matrices).map(|(x, y)| x.direct_sum(y)).collect();
        Self::new(self.graph.clone(), matrices)
    }

    /// `s^2 = 1` for every generator, then `(st)^m = 1` for finite `m`.
    pub fn check_relations(&self) -> Result<()> {
        for (s, m) in self.matrices.iter().enumerate() {
            if !(m * m).is_identity() {
                return Err(Error::RelationViolated(format!("{}^2 != 1", self.graph.label(s))));
            }
        }
        for (s, t, m) in self.graph.finite_pairs() {
            let power = (&self.matrices[s] * &self.matrices[t]).pow(m);
            if !power.is_identity() {
                let detail = if power == self.identity().scale(&crate::arith::CycloNumber::from_int(self.conductor, -1)) {
                    " (it is -1)"
                } else {
                    ""
                };
                return Err(Error::RelationViolated(format!(
                    "({}{})^{m} != 1{detail}",
                    self.graph.label(s),
                    self.graph.label(t)
                )));
            }
        }
        Ok(())
    }

    /// Basis (as columns) of the `-1`-eigenspace of generator `s`.
    pub fn minus_eigenspace(&self, s: usize) -> Result<Matrix> {
        self.eigenspace(s, -1)
    }

    pub fn plus_eigenspace(&self, s: usize) -> Result<Matrix> {
        self.eigenspace(s, 1)
    }

    fn eigenspace(&self, s: usize, sign: i64) -> Result<Matrix> {
        let id = self.identity();
        let plus = &self.matrices[s] - &id;
        let minus = &self.matrices[s] + &id;
        if plus.rank() + minus.rank() != self.dim {
            return Err(Error::Precondition(format!(
                "`{}` does not act diagonalisably with eigenvalues +-1",
                self.graph.label(s)
            )));
        }
        Ok(if sign < 0 { minus.kernel() } else { plus.kernel() })
    }

    /// Basis of `V_s^- ∩ V_t^-`.
    pub fn minus_intersection(&self, s: usize, t: usize) -> Matrix {
        let id = self.identity();
        (&self.matrices[s] + &id).vstack(&(&self.matrices[t] + &id)).kernel()
    }

    /// Vectors fixed by every generator.
    pub fn fixed_subspace(&self) -> Matrix {
        let id = self.identity();
        let stacked = self
            .matrices
            .iter()
            .map(|m| m - &id)
            .reduce(|a, b| a.vstack(&b))
            .expect("at least one generator");
        stacked.kernel()
    }

    /// `None` when `V_r^- ∩ V_t^- = 0` for every pair with finite `m_rt`,
    /// otherwise the first nonzero intersection vector found.
    pub fn a1_criterion(&self) -> Option<Witness> {
        self.graph.finite_pairs().into_iter().find_map(|(r, t, _)| {
            let meet = self.minus_intersection(r, t);
            (meet.cols() > 0).then(|| Witness { r, t, vector: meet.column(0) })
        })
    }

    /// Whether the specialized `C_{w_rt}` acts as zero for every pair with finite `m_rt`.
    pub fn cwrt_annihilation(&self) -> Result<bool> {
        for (r, t, m) in self.graph.finite_pairs() {
            if !cwrt_action(&self.matrices[r], &self.matrices[t], m)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_trivial(&self) -> bool {
        self.matrices.iter().all(Matrix::is_identity)
    }

    pub fn classify_a_value(&self) -> A1Report {
        if self.is_trivial() {
            return A1Report { verdict: AValueClass::Zero, witness: None };
        }
        match self.a1_criterion() {
            None => A1Report { verdict: AValueClass::One, witness: None },
            Some(w) => A1Report { verdict: AValueClass::GreaterThanOne, witness: Some(w) },
        }
    }

    /// Checks, in order: the `V_s^-` span `V`; pairwise intersections vanish
    /// for finite `m`; every `V_s^-` is a line.
    pub fn is_r_rep(&self) -> Result<RRepCheck> {
        if !self.graph.simply_laced() {
            return Err(Error::NotSimplyLaced);
        }
        let spaces = (0..self.graph.rank()).map(|s| self.minus_eigenspace(s)).collect::<Result<Vec<_>>>()?;
        let all = spaces.iter().skip(1).fold(spaces[0].clone(), |acc, m| acc.hstack(m));
        if all.rank() != self.dim {
            return Ok(RRepCheck::NotSpanning);
        }
        if let Some(w) = self.a1_criterion() {
            return Ok(RRepCheck::Intersecting(w.r, w.t));
        }
        if let Some(s) = spaces.iter().position(|m| m.cols() != 1) {
            return Ok(RRepCheck::NotLine(s));
        }
        Ok(RRepCheck::Holds)
    }

    /// `{"graph", "field", "dim", "matrices": {label: rows}}`.
    pub fn to_json(&self) -> serde_json::Value {
        let field = if self.conductor == 1 {
            serde_json::json!({"type": "rational"})
        } else {
            serde_json::json!({"type": "cyclotomic", "conductor": self.conductor})
        };
        let matrices = self
            .matrices
            .iter()
            .enumerate()
            .map(|(s, m)| (self.graph.label(s).to_string(), m.to_json()))
            .collect::<serde_json::Map<_, _>>();
        serde_json::json!({
            "graph": self.graph.to_json(),
            "field": field,
            "dim": self.dim,
            "matrices": matrices,
        })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let graph = CoxeterGraph::from_json(
            value.get("graph").ok_or_else(|| Error::Parse("representation needs `graph`".into()))?,
        )?;
        let field = value.get("field").ok_or_else(|| Error::Parse("representation needs `field`".into()))?;
        let conductor = match field.get("type").and_then(serde_json::Value::as_str) {
            Some("rational") => 1,
            Some("cyclotomic") => field
                .get("conductor")
                .and_then(serde_json::Value::as_u64)
                .filter(|&n| (1..=u32::MAX as u64).contains(&n))
                .ok_or_else(|| Error::Parse("cyclotomic field needs a positive `conductor`".into()))?
                as u32,
            _ => return Err(Error::Parse("field type must be `rational` or `cyclotomic`".into())),
        };
        let dim = value
            .get("dim")
            .and_then(serde_json::Value::as_u64)
            .ok_or_else(|| Error::Parse("representation needs integer `dim`".into()))? as usize;
        let map = value
            .get("matrices")
            .and_then(serde_json::Value::as_object)
            .ok_or_else(|| Error::Parse("representation needs a `matrices` object".into()))?;
        for key in map.keys() {
            graph.index_of(key)?;
        }
        let matrices = graph
            .generators()
            .iter()
            .map(|g| {
                let m = map.get(g).ok_or_else(|| Error::Parse(format!("no matrix for generator `{g}`")))?;
                Matrix::from_json(m, conductor)
            })
            .collect::<Result<Vec<_>>>()?;
        let rep = Self::new(graph, matrices)?;
        if rep.dim != dim {
            return Err(Error::DimensionMismatch(format!("`dim` is {dim} but matrices are {}x{}", rep.dim, rep.dim)));
        }
        Ok(rep)
    }
}

fn lcm(a: u32, b: u32) -> u32 {
    num_integer::lcm(a, b)
}

/// A nonzero `v` with `r v = t v = -v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub r: usize,
    pub t: usize,
    pub vector: Vector,
}

impl Witness {
    pub fn to_json(&self, rep: &MatrixRep) -> serde_json::Value {
        let rational = rep.conductor() == 1;
        serde_json::json!({
            "pair": [rep.graph().label(self.r), rep.graph().label(self.t)],
            "vector": self.vector.iter().map(|x| scalar_to_json(x, rational)).collect::<Vec<_>>(),
        })
    }

    /// Re-checks both eigen-equations and that the vector is nonzero.
    pub fn verify(&self, rep: &MatrixRep) -> bool {
        let neg: Vector = self.vector.iter().map(|x| -x).collect();
        !self.vector.iter().all(|x| x.is_zero())
            && rep.matrix(self.r).apply(&self.vector) == neg
            && rep.matrix(self.t).apply(&self.vector) == neg
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AValueClass {
    Zero,
    One,
    GreaterThanOne,
}

impl AValueClass {
    pub fn as_str(self) -> &'static str {
        match self {
            AValueClass::Zero => "value0",
            AValueClass::One => "value1",
            AValueClass::GreaterThanOne => "greater_than_1",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct A1Report {
    pub verdict: AValueClass,
    pub witness: Option<Witness>,
}

impl A1Report {
    pub fn to_json(&self, rep: &MatrixRep) -> serde_json::Value {
        serde_json::json!({
            "verdict": self.verdict.as_str(),
            "witness": self.witness.as_ref().map(|w| w.to_json(rep)),
        })
    }
}

/// Outcome of the R-representation test, naming the first failing condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RRepCheck {
    Holds,
    /// Condition (1): the `V_s^-` do not span.
    NotSpanning,
    /// Condition (2): `V_r^- ∩ V_t^- != 0`.
    Intersecting(usize, usize),
    /// Condition (3): `dim V_s^- != 1`.
    NotLine(usize),
}

impl RRepCheck {
    pub fn holds(self) -> bool {
        self == RRepCheck::Holds
    }

    /// 0 when all conditions hold, else the number of the failing condition.
    pub fn condition(self) -> u8 {
        match self {
            RRepCheck::Holds => 0,
            RRepCheck::NotSpanning => 1,
            RRepCheck::Intersecting(..) => 2,
            RRepCheck::NotLine(_) => 3,
        }
    }

    pub fn to_json(self, graph: &CoxeterGraph) -> serde_json::Value {
        let detail = match self {
            RRepCheck::Holds => serde_json::Value::Null,
            RRepCheck::NotSpanning => "the -1 eigenspaces do not span".into(),
            RRepCheck::Intersecting(r, t) => {
                format!("-1 eigenspaces of {} and {} intersect", graph.label(r), graph.label(t)).into()
            }
            RRepCheck::NotLine(s) => format!("-1 eigenspace of {} is not a line", graph.label(s)).into(),
        };
        serde_json::json!({"r_rep": self.holds(), "failed_condition": (self.condition() > 0).then_some(self.condition()), "detail": detail})
    }
}

//! The geometric representation, the one-parameter family `V_x` on
//! simply-laced graphs with one cycle, quotients, irreducibility, the maps
//! `f_tr : V_r^- -> V_t^-` and the holonomy scalar classifying the family.

use crate::arith::{two_cos, CycloNumber};
use crate::coxeter::{CoxeterGraph, EdgeOrder};
use crate::linalg::{scalar_to_json, Matrix};
use crate::rep::{AValueClass, MatrixRep};
use crate::{Error, Result};

/// Reflection representation on `span{b_s}`:
/// `s b_s = -b_s`, `s b_t = b_t + 2cos(pi/m_st) b_s`, with `2` for `m = inf`.
pub fn geometric_rep(graph: &CoxeterGraph) -> MatrixRep {
    let n = graph.rank();
    let edge_orders: Vec<u32> = graph
        .finite_pairs()
        .into_iter()
        .filter(|&(_, _, m)| m >= 3)
        .map(|(_, _, m)| m)
        .collect();
    let conductor = if edge_orders.iter().all(|&m| m == 3) {
        1
    } else {
        2 * edge_orders.iter().fold(1, |acc, &m| num_integer::lcm(acc, m))
    };
    let matrices = (0..n)
        .map(|s| {
            let mut m = Matrix::identity(n, conductor);
            m.set(s, s, CycloNumber::from_int(conductor, -1));
            for t in (0..n).filter(|&t| t != s) {
                let c = match graph.order(s, t) {
                    EdgeOrder::Finite(2) => continue,
                    EdgeOrder::Finite(3) => CycloNumber::one(conductor),
                    EdgeOrder::Finite(k) => two_cos(1, k, conductor).expect("conductor is a multiple of 2m"),
                    EdgeOrder::Infinite => CycloNumber::from_int(conductor, 2),
                };
                m.set(s, t, c);
            }
            m
        })
        .collect();
    MatrixRep::new(graph.clone(), matrices).expect("square matrices of equal size")
}

/// The unique cycle of a one-cycle graph, ordered `s0, s1, ..., sn` with `s0`
/// the smallest index and `s1` its smaller-index cycle neighbour. `None` for
/// graphs without cycles.
pub fn find_cycle(graph: &CoxeterGraph) -> Result<Option<Vec<usize>>> {
    match graph.cycle_count() {
        0 => return Ok(None),
        1 => {}
        k => return Err(Error::Unsupported(format!("graph has {k} independent cycles"))),
    }
    let n = graph.rank();
    let mut alive = vec![true; n];
    let degree = |alive: &[bool], s: usize| graph.neighbours(s).into_iter().filter(|&t| alive[t]).count();
    loop {
        let leaves: Vec<usize> = (0..n).filter(|&s| alive[s] && degree(&alive, s) <= 1).collect();
        if leaves.is_empty() {
            break;
        }
        for s in leaves {
            alive[s] = false;
        }
    }
    let on_cycle = |s: usize| graph.neighbours(s).into_iter().filter(|&t| alive[t]).collect::<Vec<_>>();
    let s0 = (0..n).find(|&s| alive[s]).expect("a cycle survives leaf stripping");
    let mut cycle = vec![s0];
    let mut prev = s0;
    let mut cur = on_cycle(s0)[0];
    while cur != s0 {
        cycle.push(cur);
        let next = on_cycle(cur).into_iter().find(|&t| t != prev).expect("cycle vertices have degree 2");
        prev = cur;
        cur = next;
    }
    Ok(Some(cycle))
}

fn require_simply_laced(graph: &CoxeterGraph) -> Result<()> {
    let n = graph.rank();
    let finite = (0..n).all(|s| (0..n).all(|t| s == t || matches!(graph.order(s, t), EdgeOrder::Finite(2 | 3))));
    if finite {
        Ok(())
    } else {
        Err(Error::NotSimplyLaced)
    }
}

/// Parameters of the family `V_x` on a one-cycle graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RRepSpec {
    pub graph: CoxeterGraph,
    pub x: CycloNumber,
    pub cycle: Vec<usize>,
}

impl RRepSpec {
    pub fn new(graph: CoxeterGraph, x: CycloNumber) -> Result<Self> {
        if x.is_zero() {
            return Err(Error::ZeroParameter);
        }
        require_simply_laced(&graph)?;
        let cycle = find_cycle(&graph)?
            .ok_or_else(|| Error::Precondition("the family V_x needs a graph with exactly one cycle".into()))?;
        Ok(Self { graph, x, cycle })
    }
}

/// The representation `~V_x`: basis `a_s`, `s a_s = -a_s`,
/// `s a_t = a_t + a_s` on edges, except `s0 a_sn = a_sn + x a_s0` and
/// `sn a_s0 = a_s0 + x^{-1} a_sn`.
pub fn build_vx(spec: &RRepSpec) -> Result<MatrixRep> {
    let graph = &spec.graph;
    let conductor = spec.x.conductor();
    let n = graph.rank();
    let s0 = spec.cycle[0];
    let sn = *spec.cycle.last().expect("nonempty cycle");
    let x_inv = spec.x.inverse()?;
    let matrices = (0..n)
        .map(|s| {
            let mut m = Matrix::identity(n, conductor);
            m.set(s, s, CycloNumber::from_int(conductor, -1));
            for t in graph.neighbours(s) {
                let c = match (s, t) {
                    _ if s == s0 && t == sn => spec.x.clone(),
                    _ if s == sn && t == s0 => x_inv.clone(),
                    _ => CycloNumber::one(conductor),
                };
                m.set(s, t, c);
            }
            m
        })
        .collect();
    let rep = MatrixRep::new(graph.clone(), matrices)?;
    rep.check_relations()?;
    Ok(rep)
}

/// The representation induced on `V / U`, where the columns of `sub` are a
/// basis of an invariant subspace `U`. The quotient basis is the images of
/// the standard vectors that greedily complete `sub` to a basis.
pub fn quotient(rep: &MatrixRep, sub: &Matrix) -> Result<MatrixRep> {
    let k = sub.cols();
    let dim = rep.dim();
    if sub.rows() != dim {
        return Err(Error::DimensionMismatch("subspace lives in a different space".into()));
    }
    if sub.rank() != k {
        return Err(Error::Precondition("subspace basis is linearly dependent".into()));
    }
    if k == dim {
        return Err(Error::Precondition("quotient by the whole space".into()));
    }
    for m in rep.matrices() {
        if k > 0 && sub.hstack(&(m * sub)).rank() != k {
            return Err(Error::NotInvariant);
        }
    }
    let basis = sub.extend_to_basis();
    let inv = basis.inverse()?;
    let q = dim - k;
    let matrices = rep
        .matrices()
        .iter()
        .map(|m| {
            let full = &(&inv * m) * &basis;
            let mut block = Matrix::zeros(q, q, rep.conductor());
            for i in 0..q {
                for j in 0..q {
                    block.set(i, j, full.get(k + i, k + j).clone());
                }
            }
            block
        })
        .collect();
    MatrixRep::new(rep.graph().clone(), matrices)
}

/// Radical of the invariant form `B(b_s, b_t) = -2cos(pi/m_st)`, `B(b_s, b_s) = 2`,
/// in the basis of [`geometric_rep`].
pub fn form_radical(graph: &CoxeterGraph) -> Matrix {
    let geo = geometric_rep(graph);
    let n = graph.rank();
    let c = geo.conductor();
    let mut form = Matrix::zeros(n, n, c);
    for s in 0..n {
        form.set(s, s, CycloNumber::from_int(c, 2));
        for t in (0..n).filter(|&t| t != s) {
            // s b_t = b_t - B(b_s, b_t) b_s
            form.set(s, t, -geo.matrix(s).get(s, t));
        }
    }
    form.kernel()
}

/// Burnside's criterion: the algebra generated by the matrices is all of
/// `End(V)`. Products are grown by word length until the span is closed under
/// left multiplication by generators. `None` when the length cap `2 dim^2` is
/// reached first.
pub fn irreducible(rep: &MatrixRep) -> Option<bool> {
    let dim = rep.dim();
    let full = dim * dim;
    let flatten = |m: &Matrix| m.entries().to_vec();
    let mut frontier = vec![rep.identity()];
    let mut span = Matrix::from_columns(rep.conductor(), full, &[flatten(&frontier[0])]);
    for _ in 0..2 * full {
        if span.cols() == full {
            return Some(true);
        }
        let mut next = Vec::new();
        for m in &frontier {
            for g in rep.matrices() {
                let p = g * m;
                let candidate = span.hstack(&Matrix::from_columns(rep.conductor(), full, &[flatten(&p)]));
                if candidate.rank() > span.cols() {
                    span = candidate;
                    next.push(p);
                }
            }
        }
        if next.is_empty() {
            return Some(span.cols() == full);
        }
        frontier = next;
    }
    (span.cols() == full).then_some(true)
}

/// Matrix of `f_tr : v -> t v - v` from `V_r^-` to `V_t^-`, in the bases
/// returned by [`MatrixRep::minus_eigenspace`].
pub fn f_map(rep: &MatrixRep, t: usize, r: usize) -> Result<Matrix> {
    let graph = rep.graph();
    if r == t || graph.order(r, t) != EdgeOrder::Finite(3) {
        return Err(Error::Precondition(format!(
            "f-maps need m = 3, but m({}, {}) = {}",
            graph.label(t),
            graph.label(r),
            graph.order(r, t)
        )));
    }
    if rep.a1_criterion().is_some() {
        return Err(Error::Precondition("representation fails the a-value-1 criterion".into()));
    }
    let source = rep.minus_eigenspace(r)?;
    let target = rep.minus_eigenspace(t)?;
    let images = source
        .columns()
        .into_iter()
        .map(|v| {
            let tv = rep.matrix(t).apply(&v);
            let w: Vec<CycloNumber> = tv.iter().zip(&v).map(|(a, b)| a - b).collect();
            target
                .solve(&w)
                .ok_or_else(|| Error::Precondition("t v - v is not in the -1 eigenspace of t".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(rep.conductor(), target.cols(), &images))
}

/// The scalar by which `f_{s0 sn} ... f_{s2 s1} f_{s1 s0}` acts on the line
/// `V_{s0}^-`. `cycle` lists the cycle vertices in order, starting at the base point.
pub fn holonomy(rep: &MatrixRep, cycle: &[usize]) -> Result<CycloNumber> {
    if cycle.len() < 3 {
        return Err(Error::Precondition("a cycle has at least three vertices".into()));
    }
    if !rep.is_r_rep()?.holds() {
        return Err(Error::Precondition("holonomy needs an R-representation".into()));
    }
    let mut total = Matrix::identity(1, rep.conductor());
    for i in 0..cycle.len() {
        let (from, to) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        total = &f_map(rep, to, from)? * &total;
    }
    Ok(total.get(0, 0).clone())
}

/// Certificates attached to every catalog entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificates {
    pub relations: bool,
    pub irreducible: Option<bool>,
    pub r_rep: bool,
    pub a_value: AValueClass,
}

impl Certificates {
    pub fn compute(rep: &MatrixRep) -> Result<Self> {
        Ok(Self {
            relations: rep.check_relations().is_ok(),
            irreducible: irreducible(rep),
            r_rep: rep.is_r_rep()?.holds(),
            a_value: rep.classify_a_value().verdict,
        })
    }

    pub fn all_pass(&self) -> bool {
        self.relations && self.irreducible == Some(true) && self.r_rep && self.a_value == AValueClass::One
    }

    pub fn to_json(&self) -> serde_json::Value {
        let a_value = match self.a_value {
            AValueClass::Zero => "0",
            AValueClass::One => "1",
            AValueClass::GreaterThanOne => ">1",
        };
        let irreducible = match self.irreducible {
            Some(b) => serde_json::Value::Bool(b),
            None => "indeterminate".into(),
        };
        serde_json::json!({
            "relations": self.relations,
            "irreducible": irreducible,
            "r_rep": self.r_rep,
            "a_value": a_value,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalogKind {
    TreeUnique,
    CycleFamily,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub kind: CatalogKind,
    pub rep: MatrixRep,
    pub parameter: Option<CycloNumber>,
    pub holonomy: Option<CycloNumber>,
    pub certificates: Certificates,
}

impl CatalogEntry {
    pub fn to_json(&self) -> serde_json::Value {
        let scalar = |x: &CycloNumber| scalar_to_json(x, true);
        serde_json::json!({
            "kind": match self.kind {
                CatalogKind::TreeUnique => "tree-unique",
                CatalogKind::CycleFamily => "cycle-family",
            },
            "dim": self.rep.dim(),
            "parameter": self.parameter.as_ref().map(scalar),
            "holonomy": self.holonomy.as_ref().map(scalar),
            "certificates": self.certificates.to_json(),
        })
    }
}

/// The simple quotient of the geometric representation of a tree.
pub fn tree_rep(graph: &CoxeterGraph) -> Result<MatrixRep> {
    let radical = form_radical(graph);
    quotient(&geometric_rep(graph), &radical)
}

/// `V_x = ~V_x / U_x`, with `U_x` the fixed vectors.
pub fn build_quotient_vx(spec: &RRepSpec) -> Result<MatrixRep> {
    let full = build_vx(spec)?;
    let fixed = full.fixed_subspace();
    quotient(&full, &fixed)
}

/// Irreducible a-value-1 representations of a connected simply-laced graph
/// with at most one cycle: the unique one for a tree, or one `V_x` per sample.
pub fn classify(graph: &CoxeterGraph, samples: &[CycloNumber]) -> Result<Vec<CatalogEntry>> {
    if !graph.connected() {
        return Err(Error::Precondition("graph must be connected".into()));
    }
    require_simply_laced(graph)?;
    match find_cycle(graph)? {
        None => {
            let rep = tree_rep(graph)?;
            let certificates = Certificates::compute(&rep)?;
            Ok(vec![CatalogEntry { kind: CatalogKind::TreeUnique, rep, parameter: None, holonomy: None, certificates }])
        }
        Some(cycle) => samples
            .iter()
            .map(|x| {
                let spec = RRepSpec::new(graph.clone(), x.clone())?;
                let rep = build_quotient_vx(&spec)?;
                let certificates = Certificates::compute(&rep)?;
                let holonomy = holonomy(&rep, &cycle)?;
                Ok(CatalogEntry {
                    kind: CatalogKind::CycleFamily,
                    rep,
                    parameter: Some(x.clone()),
                    holonomy: Some(holonomy),
                    certificates,
                })
            })
            .collect(),
    }
}

pub fn catalog_json(entries: &[CatalogEntry]) -> serde_json::Value {
    serde_json::Value::Array(entries.iter().map(CatalogEntry::to_json).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::BigRational;
    use crate::dihedral::{irreducible_matrices, DihedralKind};

    fn rat(p: i64, q: i64) -> CycloNumber {
        CycloNumber::from_rational(1, BigRational::new(p.into(), q.into()))
    }

    fn triangle() -> CoxeterGraph {
        CoxeterGraph::affine_a_cycle(3)
    }

    #[test]
    fn geometric_matches_dihedral_rho1() {
        for m in 3..=7 {
            let g = CoxeterGraph::dihedral(EdgeOrder::Finite(m)).unwrap();
            let geo = geometric_rep(&g);
            let irrep = irreducible_matrices(m, DihedralKind::Rho(1)).unwrap();
            assert_eq!(geo.promote(2 * m).unwrap().matrix(0), &irrep.r);
            assert_eq!(geo.promote(2 * m).unwrap().matrix(1), &irrep.t);
        }
        let a2 = geometric_rep(&CoxeterGraph::type_a(2));
        assert_eq!(a2.conductor(), 1);
        assert_eq!(a2.matrix(0), &Matrix::from_int_rows(1, &[[-1, 1], [0, 1]]));
        assert_eq!(a2.matrix(1), &Matrix::from_int_rows(1, &[[1, 0], [1, -1]]));
    }

    #[test]
    fn cycle_order() {
        let g = triangle();
        assert_eq!(find_cycle(&g).unwrap(), Some(vec![0, 1, 2]));
        assert_eq!(find_cycle(&CoxeterGraph::type_a(3)).unwrap(), None);
        let two = CoxeterGraph::new(
            ["a", "b", "c", "d"],
            [("a", "b"), ("b", "c"), ("c", "a"), ("a", "d"), ("d", "b")]
                .map(|(p, q)| (p.to_string(), q.to_string(), EdgeOrder::Finite(3))),
        )
        .unwrap();
        assert!(matches!(find_cycle(&two), Err(Error::Unsupported(_))));
        assert!(matches!(classify(&two, &[rat(1, 1)]), Err(Error::Unsupported(_))));
    }

    #[test]
    fn vx_on_triangle() {
        let spec = RRepSpec::new(triangle(), rat(5, 1)).unwrap();
        let rep = build_vx(&spec).unwrap();
        assert_eq!(rep.matrix(0), &Matrix::from_int_rows(1, &[[-1, 1, 5], [0, 1, 0], [0, 0, 1]]));
        let one = build_vx(&RRepSpec::new(triangle(), rat(1, 1)).unwrap()).unwrap();
        assert_eq!(one, geometric_rep(&triangle()));
        assert!(matches!(RRepSpec::new(triangle(), rat(0, 1)), Err(Error::ZeroParameter)));
    }

    #[test]
    fn quotient_at_one() {
        let full = build_vx(&RRepSpec::new(triangle(), rat(1, 1)).unwrap()).unwrap();
        let fixed = full.fixed_subspace();
        assert_eq!(fixed.cols(), 1);
        assert!(fixed.column(0).iter().all(|c| c == fixed.get(0, 0)));
        let q = quotient(&full, &fixed).unwrap();
        assert_eq!(q.dim(), 2);
        q.check_relations().unwrap();
        assert_eq!(irreducible(&q), Some(true));
        assert_eq!(holonomy(&q, &[0, 1, 2]).unwrap(), rat(1, 1));
        let same = quotient(&full, &Matrix::zeros(3, 0, 1)).unwrap();
        assert_eq!(same, full);
        let not_invariant = Matrix::from_int_rows(1, &[[1], [0], [0]]);
        assert!(matches!(quotient(&full, &not_invariant), Err(Error::NotInvariant)));
    }

    #[test]
    fn burnside() {
        let g = CoxeterGraph::dihedral(EdgeOrder::Finite(3)).unwrap();
        let irrep = irreducible_matrices(3, DihedralKind::Rho(1)).unwrap();
        let rho = MatrixRep::new(g.clone(), vec![irrep.r, irrep.t]).unwrap();
        assert_eq!(irreducible(&rho), Some(true));
        assert_eq!(irreducible(&MatrixRep::trivial(g, 2, 1)), Some(false));
        let v2 = build_vx(&RRepSpec::new(triangle(), rat(2, 1)).unwrap()).unwrap();
        assert_eq!(irreducible(&v2), Some(true));
    }

    #[test]
    fn f_maps_and_holonomy() {
        let g = CoxeterGraph::dihedral(EdgeOrder::Finite(3)).unwrap();
        let rho = geometric_rep(&g);
        assert_eq!(f_map(&rho, 1, 0).unwrap(), Matrix::from_int_rows(1, &[[1]]));
        let round = &f_map(&rho, 0, 1).unwrap() * &f_map(&rho, 1, 0).unwrap();
        assert!(round.is_identity());
        let a1a1 = CoxeterGraph::dihedral(EdgeOrder::Finite(2)).unwrap();
        assert!(f_map(&geometric_rep(&a1a1), 1, 0).is_err());

        let v3 = build_vx(&RRepSpec::new(triangle(), rat(3, 1)).unwrap()).unwrap();
        assert_eq!(holonomy(&v3, &[0, 1, 2]).unwrap(), rat(3, 1));
        assert_eq!(holonomy(&v3, &[1, 2, 0]).unwrap(), rat(3, 1));
        assert_eq!(holonomy(&geometric_rep(&triangle()), &[0, 1, 2]).unwrap(), rat(1, 1));
    }

    #[test]
    fn classify_examples() {
        let entries = classify(&CoxeterGraph::type_a(3), &[]).unwrap();
        assert_eq!(entries.len(), 1);
        assert_eq!(entries[0].rep.dim(), 3);
        assert!(entries[0].certificates.all_pass());

        let samples = [rat(1, 1), rat(2, 1), rat(-1, 1), rat(1, 2)];
        let entries = classify(&triangle(), &samples).unwrap();
        assert_eq!(entries.len(), 4);
        for (e, x) in entries.iter().zip(&samples) {
            assert!(e.certificates.all_pass(), "{:?}", e.certificates);
            assert_eq!(e.holonomy.as_ref(), Some(x));
        }
        let json = catalog_json(&entries);
        assert_eq!(json[3]["holonomy"], "1/2");
        assert_eq!(json[0]["dim"], 2);
        assert_eq!(json[0]["certificates"]["a_value"], "1");
    }
}

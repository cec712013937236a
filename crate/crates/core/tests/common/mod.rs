//! Representation corpus shared by the integration and acceptance tests.
#![allow(dead_code)]

use coxcell::arith::{BigRational, CycloNumber};
use coxcell::coxeter::{CoxeterGraph, EdgeOrder};
use coxcell::dihedral::{irreducible_kinds, irreducible_matrices, DihedralKind};
use coxcell::rep::MatrixRep;
use coxcell::rrep::{build_quotient_vx, build_vx, geometric_rep, RRepSpec};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn dihedral_graph(m: u32) -> CoxeterGraph {
    CoxeterGraph::dihedral(EdgeOrder::Finite(m)).unwrap()
}

pub fn irrep(m: u32, kind: DihedralKind) -> MatrixRep {
    let irrep = irreducible_matrices(m, kind).unwrap();
    MatrixRep::new(dihedral_graph(m), vec![irrep.r, irrep.t]).unwrap()
}

pub fn rational(p: i64, q: i64) -> CycloNumber {
    CycloNumber::from_rational(1, BigRational::new(p.into(), q.into()))
}

/// The parameters used for the one-cycle family: four rationals and a
/// primitive cube root of unity.
pub fn vx_samples() -> Vec<CycloNumber> {
    vec![rational(1, 1), rational(2, 1), rational(-1, 1), rational(1, 2), CycloNumber::zeta_pow(3, 1)]
}

pub mod s4;

pub fn triangle() -> CoxeterGraph {
    CoxeterGraph::affine_a_cycle(3)
}

/// A random direct sum of two to four dihedral irreducibles, with the
/// multiplicities used to build it.
pub fn random_sum(rng: &mut StdRng) -> (u32, Vec<DihedralKind>, MatrixRep) {
    let m = rng.gen_range(2..=8u32);
    let kinds = irreducible_kinds(m);
    let count = rng.gen_range(2..=4);
    let chosen: Vec<DihedralKind> = (0..count).map(|_| kinds[rng.gen_range(0..kinds.len())]).collect();
    let rep = chosen[1..]
        .iter()
        .fold(irrep(m, chosen[0]), |acc, &k| acc.direct_sum(&irrep(m, k)).unwrap());
    (m, chosen, rep)
}

/// Named representations: every dihedral irreducible for `m <= 8`, fifty
/// seeded random direct sums, geometric representations of `A2`, `A3`, `D4`
/// and the triangle, and the `V_x` samples with their quotients.
pub fn corpus() -> Vec<(String, MatrixRep)> {
    let mut out = Vec::new();
    for m in 2..=8u32 {
        for kind in irreducible_kinds(m) {
            out.push((format!("D{m} {kind}"), irrep(m, kind)));
        }
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for i in 0..50 {
        let (m, kinds, rep) = random_sum(&mut rng);
        let names: Vec<String> = kinds.iter().map(ToString::to_string).collect();
        out.push((format!("sum {i} of D{m}: {}", names.join(" + ")), rep));
    }
    for (name, graph) in [
        ("A2", CoxeterGraph::type_a(2)),
        ("A3", CoxeterGraph::type_a(3)),
        ("D4", CoxeterGraph::type_d(4)),
        ("triangle", triangle()),
    ] {
        out.push((format!("geometric {name}"), geometric_rep(&graph)));
    }
    for x in vx_samples() {
        let spec = RRepSpec::new(triangle(), x.clone()).unwrap();
        out.push((format!("~V_x, x = {x}"), build_vx(&spec).unwrap()));
        out.push((format!("V_x, x = {x}"), build_quotient_vx(&spec).unwrap()));
    }
    out
}

//! Irreducible representations of the finite dihedral group `D_m = <r, t>`,
//! character decomposition of arbitrary representations, and the action of
//! the specialized Kazhdan–Lusztig element `C_{w_rt}`.
//!
//! `rho(k)` is written in the basis `(beta_r, beta_t)`:
//!
//! ```text
//! r -> [[-1, c], [0, 1]]      t -> [[1, 0], [c, -1]]      c = 2cos(k pi / m)
//! ```
//!
//! so `r beta_t = beta_t + c beta_r` and `t beta_r = beta_r + c beta_t`.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::Signed;

use crate::arith::{two_cos, BigRational, CycloNumber};
use crate::linalg::Matrix;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DihedralKind {
    Trivial,
    Sign,
    /// `r -> -1, t -> 1` (m even).
    EpsR,
    /// `r -> 1, t -> -1` (m even).
    EpsT,
    Rho(u32),
}

impl DihedralKind {
    pub fn to_json(self) -> serde_json::Value {
        match self {
            DihedralKind::Rho(k) => serde_json::json!({"rho": k}),
            other => serde_json::Value::from(other.to_string()),
        }
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        if let Some(k) = value.get("rho").and_then(serde_json::Value::as_u64) {
            return Ok(DihedralKind::Rho(k as u32));
        }
        value
            .as_str()
            .ok_or_else(|| Error::Parse(format!("bad dihedral kind {value}")))?
            .parse()
    }

    /// Valid for `D_m`: `rho(k)` needs `1 <= k <= m/2`; `eps_r`, `eps_t` need even `m`.
    pub fn is_valid_for(self, m: u32) -> bool {
        match self {
            DihedralKind::Trivial | DihedralKind::Sign => true,
            DihedralKind::EpsR | DihedralKind::EpsT => m.is_multiple_of(2),
            DihedralKind::Rho(k) => k >= 1 && 2 * k <= m,
        }
    }

    pub fn dim(self) -> usize {
        match self {
            DihedralKind::Rho(_) => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for DihedralKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DihedralKind::Trivial => write!(f, "trivial"),
            DihedralKind::Sign => write!(f, "sign"),
            DihedralKind::EpsR => write!(f, "eps_r"),
            DihedralKind::EpsT => write!(f, "eps_t"),
            DihedralKind::Rho(k) => write!(f, "rho:{k}"),
        }
    }
}

impl std::str::FromStr for DihedralKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "trivial" => DihedralKind::Trivial,
            "sign" => DihedralKind::Sign,
            "eps_r" => DihedralKind::EpsR,
            "eps_t" => DihedralKind::EpsT,
            _ => {
                let k = s
                    .strip_prefix("rho:")
                    .and_then(|k| k.parse().ok())
                    .ok_or_else(|| Error::Parse(format!("unknown dihedral kind `{s}`")))?;
                DihedralKind::Rho(k)
            }
        })
    }
}

/// The complete list of pairwise non-isomorphic irreducibles of `D_m`.
pub fn irreducible_kinds(m: u32) -> Vec<DihedralKind> {
    let mut kinds = vec![DihedralKind::Trivial, DihedralKind::Sign];
    if m.is_multiple_of(2) {
        kinds.extend([DihedralKind::EpsR, DihedralKind::EpsT]);
    }
    kinds.extend((1..).take_while(|&k| 2 * k < m).map(DihedralKind::Rho));
    kinds
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DihedralIrrep {
    pub m: u32,
    pub kind: DihedralKind,
    pub r: Matrix,
    pub t: Matrix,
}

impl DihedralIrrep {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "m": self.m,
            "kind": self.kind.to_json(),
            "matrices": {"r": self.r.to_json(), "t": self.t.to_json()},
        })
    }
}

/// Explicit matrices over `Q(zeta_{2m})`.
pub fn irreducible_matrices(m: u32, kind: DihedralKind) -> Result<DihedralIrrep> {
    if m < 2 || !kind.is_valid_for(m) {
        return Err(Error::InvalidKind { kind: kind.to_string(), m });
    }
    let n = 2 * m;
    let scalar = |x: i64| Matrix::from_int_rows(n, &[[x]]);
    let (r, t) = match kind {
        DihedralKind::Trivial => (scalar(1), scalar(1)),
        DihedralKind::Sign => (scalar(-1), scalar(-1)),
        DihedralKind::EpsR => (scalar(-1), scalar(1)),
        DihedralKind::EpsT => (scalar(1), scalar(-1)),
        DihedralKind::Rho(k) => {
            let c = two_cos(k as i64, m, n)?;
            let one = CycloNumber::one(n);
            let zero = CycloNumber::zero(n);
            let r = Matrix::from_rows(n, vec![vec![-&one, c.clone()], vec![zero.clone(), one.clone()]])?;
            let t = Matrix::from_rows(n, vec![vec![one.clone(), zero], vec![c, -&one]])?;
            (r, t)
        }
    };
    Ok(DihedralIrrep { m, kind, r, t })
}

/// Checks `r^2 = t^2 = (rt)^m = 1`.
pub fn check_dihedral_relations(r: &Matrix, t: &Matrix, m: u32) -> Result<()> {
    if !r.is_square() || !t.is_square() || r.rows() != t.rows() {
        return Err(Error::DimensionMismatch("generator matrices must be square of equal size".into()));
    }
    if r.conductor() != t.conductor() {
        return Err(Error::ConductorMismatch(r.conductor(), t.conductor()));
    }
    if !(r * r).is_identity() {
        return Err(Error::RelationViolated("r^2 != 1".into()));
    }
    if !(t * t).is_identity() {
        return Err(Error::RelationViolated("t^2 != 1".into()));
    }
    if !(r * t).pow(m).is_identity() {
        return Err(Error::RelationViolated(format!("(rt)^{m} != 1")));
    }
    Ok(())
}

/// Conjugacy class representatives of `D_m` as words `(rt)^j` or a single
/// reflection, with class sizes.
fn classes(m: u32) -> Vec<(ClassRep, u32)> {
    let mut out = vec![(ClassRep::Rotation(0), 1)];
    for j in 1..=m / 2 {
        out.push((ClassRep::Rotation(j), if 2 * j == m { 1 } else { 2 }));
    }
    if m % 2 == 1 {
        out.push((ClassRep::R, m));
    } else {
        out.push((ClassRep::R, m / 2));
        out.push((ClassRep::T, m / 2));
    }
    out
}

#[derive(Debug, Clone, Copy)]
enum ClassRep {
    Rotation(u32),
    R,
    T,
}

fn class_trace(rep: ClassRep, r: &Matrix, t: &Matrix) -> CycloNumber {
    match rep {
        ClassRep::Rotation(j) => (r * t).pow(j).trace(),
        ClassRep::R => r.trace(),
        ClassRep::T => t.trace(),
    }
}

fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

/// Multiplicity of every irreducible of `D_m` in the representation
/// `r -> rho_r, t -> rho_t`, from character inner products. The characters of
/// the irreducibles are traced off their explicit matrices.
pub fn decompose(rho_r: &Matrix, rho_t: &Matrix, m: u32) -> Result<BTreeMap<DihedralKind, u32>> {
    if m < 2 {
        return Err(Error::Precondition("dihedral order m must be at least 2".into()));
    }
    check_dihedral_relations(rho_r, rho_t, m)?;
    let n = lcm(rho_r.conductor(), 2 * m);
    let (r, t) = (rho_r.promote(n)?, rho_t.promote(n)?);
    let classes = classes(m);
    let traces: Vec<CycloNumber> = classes.iter().map(|&(c, _)| class_trace(c, &r, &t)).collect();
    let order = BigRational::from_integer((2 * m).into());
    let mut out = BTreeMap::new();
    for kind in irreducible_kinds(m) {
        let irrep = irreducible_matrices(m, kind)?;
        let (ir, it) = (irrep.r.promote(n)?, irrep.t.promote(n)?);
        let mut sum = CycloNumber::zero(n);
        for ((class, size), tr) in classes.iter().zip(&traces) {
            // Dihedral characters are real, so no conjugation is needed.
            let chi = class_trace(*class, &ir, &it);
            sum = &sum + &(&chi * tr).scale(&BigRational::from_integer((*size).into()));
        }
        let mult = sum
            .scale(&order.recip())
            .to_rational()
            .filter(|q| q.is_integer() && !q.is_negative())
            .ok_or_else(|| Error::NonIntegerMultiplicity(kind.to_string()))?;
        let mult = u32::try_from(mult.to_integer()).map_err(|_| Error::NonIntegerMultiplicity(kind.to_string()))?;
        out.insert(kind, mult);
    }
    let total: usize = out.iter().map(|(k, &c)| k.dim() * c as usize).sum();
    if total != r.rows() {
        return Err(Error::NonIntegerMultiplicity("dimension count".into()));
    }
    Ok(out)
}

pub fn multiplicities_json(mults: &BTreeMap<DihedralKind, u32>) -> serde_json::Value {
    let map = mults
        .iter()
        .map(|(k, &c)| (k.to_string(), serde_json::Value::from(c)))
        .collect::<serde_json::Map<_, _>>();
    serde_json::json!({"multiplicities": map})
}

/// Matrix of `C_{w_rt}` at `q = 1`:
/// `w_rt + (-1)^m + sum_{i=1}^{m-1} (-1)^i (r_{m-i} + t_{m-i})`,
/// where `r_k = rtr...` and `t_k = trt...` have `k` factors.
pub fn cwrt_action(rho_r: &Matrix, rho_t: &Matrix, m: u32) -> Result<Matrix> {
    check_dihedral_relations(rho_r, rho_t, m)?;
    let dim = rho_r.rows();
    let id = Matrix::identity(dim, rho_r.conductor());
    // alt_r[k] = r t r ... (k factors), alt_t[k] likewise starting with t.
    let alternating = |first: &Matrix, second: &Matrix| {
        let mut out = vec![id.clone()];
        for k in 1..=m as usize {
            let next = if k % 2 == 1 { first } else { second };
            out.push(&out[k - 1] * next);
        }
        out
    };
    let alt_r = alternating(rho_r, rho_t);
    let alt_t = alternating(rho_t, rho_r);
    let mut total = alt_r[m as usize].clone();
    total = if m.is_multiple_of(2) { &total + &id } else { &total - &id };
    for i in 1..m as usize {
        let pair = &alt_r[m as usize - i] + &alt_t[m as usize - i];
        total = if i % 2 == 0 { &total + &pair } else { &total - &pair };
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rho_one_for_m3() {
        let irrep = irreducible_matrices(3, DihedralKind::Rho(1)).unwrap();
        // r beta_t = beta_t + beta_r: second column of r is (1, 1).
        assert!(irrep.r.get(0, 1).is_one() && irrep.r.get(1, 1).is_one());
        check_dihedral_relations(&irrep.r, &irrep.t, 3).unwrap();
    }

    #[test]
    fn one_dimensional_kinds() {
        let eps_r = irreducible_matrices(4, DihedralKind::EpsR).unwrap();
        assert_eq!(eps_r.r, Matrix::from_int_rows(8, &[[-1]]));
        assert_eq!(eps_r.t, Matrix::from_int_rows(8, &[[1]]));
        assert!(irreducible_matrices(3, DihedralKind::EpsR).is_err());
        assert!(irreducible_matrices(5, DihedralKind::Rho(3)).is_err());
        assert!(irreducible_matrices(5, DihedralKind::Rho(0)).is_err());
    }

    #[test]
    fn rho_half_is_diagonal() {
        let irrep = irreducible_matrices(4, DihedralKind::Rho(2)).unwrap();
        assert_eq!(irrep.r, Matrix::from_int_rows(8, &[[-1, 0], [0, 1]]));
        assert_eq!(irrep.t, Matrix::from_int_rows(8, &[[1, 0], [0, -1]]));
        let d = decompose(&irrep.r, &irrep.t, 4).unwrap();
        assert_eq!(d[&DihedralKind::EpsR], 1);
        assert_eq!(d[&DihedralKind::EpsT], 1);
    }

    #[test]
    fn decompose_examples() {
        let irrep = irreducible_matrices(3, DihedralKind::Rho(1)).unwrap();
        let d = decompose(&irrep.r, &irrep.t, 3).unwrap();
        assert_eq!(d.values().copied().collect::<Vec<_>>(), vec![0, 0, 1]);

        let r = Matrix::from_int_rows(1, &[[1, 0], [0, -1]]);
        let d = decompose(&r, &r, 4).unwrap();
        assert_eq!(d[&DihedralKind::Trivial], 1);
        assert_eq!(d[&DihedralKind::Sign], 1);
        assert_eq!(d.values().sum::<u32>(), 2);

        let bad = Matrix::from_int_rows(1, &[[1, 1], [0, 1]]);
        assert!(matches!(decompose(&bad, &bad, 3), Err(Error::RelationViolated(_))));
    }

    #[test]
    fn cwrt_examples() {
        for m in [2, 3, 5, 6] {
            let sign = irreducible_matrices(m, DihedralKind::Sign).unwrap();
            let expected = if m % 2 == 0 { 2 * m as i64 } else { -2 * m as i64 };
            assert_eq!(cwrt_action(&sign.r, &sign.t, m).unwrap(), Matrix::from_int_rows(2 * m, &[[expected]]));
            let triv = irreducible_matrices(m, DihedralKind::Trivial).unwrap();
            assert!(cwrt_action(&triv.r, &triv.t, m).unwrap().is_zero());
        }
    }

    #[test]
    fn kind_parsing() {
        for kind in irreducible_kinds(6) {
            assert_eq!(DihedralKind::from_json(&kind.to_json()).unwrap(), kind);
            assert_eq!(kind.to_string().parse::<DihedralKind>().unwrap(), kind);
        }
        assert_eq!(irreducible_kinds(5).len(), 4);
        assert_eq!(irreducible_kinds(6).len(), 6);
    }
}

//! Independent Kazhdan–Lusztig oracle for `S_4`, acting on permutations.

use std::collections::{BTreeMap, HashMap};

// Laurent polynomials in v for the oracle, as degree -> coefficient.
pub type Lp = BTreeMap<i32, i64>;

fn lp_add(a: &mut Lp, b: &Lp, scale: i64, shift: i32) {
    for (&d, &c) in b {
        let e = a.entry(d + shift).or_insert(0);
        *e += scale * c;
        if *e == 0 {
            a.remove(&(d + shift));
        }
    }
}

fn lp_mul(a: &Lp, b: &Lp) -> Lp {
    let mut out = Lp::new();
    for (&d, &c) in a {
        lp_add(&mut out, b, c, d);
    }
    out
}

fn lp_bar(a: &Lp) -> Lp {
    a.iter().map(|(&d, &c)| (-d, c)).collect()
}

pub type Perm = [u8; 4];

pub fn inversions(p: &Perm) -> usize {
    (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count()
}

/// `s_i o p`: swaps the values `i` and `i + 1`.
fn left_mul(i: usize, p: &Perm) -> Perm {
    p.map(|x| if x as usize == i { x + 1 } else if x as usize == i + 1 { x - 1 } else { x })
}

pub fn perm_of_word(word: &[usize]) -> Perm {
    word.iter().rev().fold([0, 1, 2, 3], |p, &s| left_mul(s, &p))
}

type HeckeVec = HashMap<Perm, Lp>;

/// `T_s h` in the normalized basis: `T_s T_w = T_sw` or `T_sw + (v - 1/v) T_w`.
fn t_s_times(s: usize, h: &HeckeVec) -> HeckeVec {
    let mut out = HeckeVec::new();
    let v_minus: Lp = [(1, 1), (-1, -1)].into_iter().collect();
    for (w, c) in h {
        let sw = left_mul(s, w);
        lp_add(out.entry(sw).or_default(), c, 1, 0);
        if inversions(&sw) < inversions(w) {
            let extra = lp_mul(&v_minus, c);
            lp_add(out.entry(*w).or_default(), &extra, 1, 0);
        }
    }
    out.retain(|_, c| !c.is_empty());
    out
}

/// `P_{y,w}` for `S_4` by the bar-invariant unitriangular solve: the
/// self-dual `C'_w = sum_y p_{y,w} T_y` with `p_{w,w} = 1` and
/// `p_{y,w} in v^{-1} Z[v^{-1}]`. Independent of the Kazhdan–Lusztig recursion.
pub fn s4_oracle() -> (Vec<Perm>, HashMap<(Perm, Perm), Lp>) {
    let mut perms: Vec<Perm> = Vec::new();
    for a in 0..4u8 {
        for b in 0..4u8 {
            for c in 0..4u8 {
                for d in 0..4u8 {
                    let p = [a, b, c, d];
                    let mut sorted = p;
                    sorted.sort();
                    if sorted == [0, 1, 2, 3] {
                        perms.push(p);
                    }
                }
            }
        }
    }
    perms.sort_by_key(inversions);
    // bar(T_w) = (T_s - (v - 1/v)) bar(T_sw) for a left descent s.
    let mut bars: HashMap<Perm, HeckeVec> = HashMap::new();
    for w in &perms {
        let bar = match (0..3).find(|&s| inversions(&left_mul(s, w)) < inversions(w)) {
            None => HeckeVec::from([(*w, Lp::from([(0, 1)]))]),
            Some(s) => {
                let inner = &bars[&left_mul(s, w)];
                let mut out = t_s_times(s, inner);
                for (u, c) in inner {
                    let shifted: Lp = [(1, -1), (-1, 1)].into_iter().collect();
                    lp_add(out.entry(*u).or_default(), &lp_mul(&shifted, c), 1, 0);
                }
                out.retain(|_, c| !c.is_empty());
                out
            }
        };
        bars.insert(*w, bar);
    }
    let mut table = HashMap::new();
    for w in &perms {
        let mut p: HashMap<Perm, Lp> = HashMap::from([(*w, Lp::from([(0, 1)]))]);
        for y in perms.iter().rev().filter(|y| inversions(y) < inversions(w)) {
            let mut b = Lp::new();
            for (z, pz) in &p {
                if let Some(r) = bars[z].get(y) {
                    lp_add(&mut b, &lp_mul(&lp_bar(pz), r), 1, 0);
                }
            }
            let mut anti = b.clone();
            lp_add(&mut anti, &lp_bar(&b), 1, 0);
            assert!(anti.is_empty(), "p - bar(p) must be antisymmetric");
            let py: Lp = b.into_iter().filter(|&(d, _)| d < 0).collect();
            if !py.is_empty() {
                p.insert(*y, py);
            }
        }
        for (y, py) in p {
            table.insert((y, *w), py);
        }
    }
    (perms, table)
}


use std::collections::{BTreeSet, HashMap};

use coxcell::coxeter::{CoxeterGraph, CoxeterGroup, EdgeOrder, Element};
use coxcell::linalg::Matrix;
use coxcell::rrep::geometric_rep;

fn dihedral(m: u32) -> CoxeterGraph {
    CoxeterGraph::dihedral(EdgeOrder::Finite(m)).unwrap()
}

fn all_words(rank: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<usize>| {
                (0..rank).map(move |s| {
                    let mut w = w.clone();
                    w.push(s);
                    w
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Key of the group element a word represents, via the geometric
/// representation, which is faithful for finite groups.
fn image(matrices: &[Matrix], word: &[usize]) -> String {
    let n = matrices[0].rows();
    let m = word.iter().fold(Matrix::identity(n, matrices[0].conductor()), |acc, &s| &acc * &matrices[s]);
    m.to_json().to_string()
}

#[test]
fn normal_forms_exhaustive() {
    for graph in [dihedral(3), dihedral(4), CoxeterGraph::type_a(3)] {
        let group = CoxeterGroup::new(graph.clone());
        let geo = geometric_rep(&graph);
        let words = all_words(graph.rank(), 6);
        // Shortest word length per matrix image; words come in length order.
        let mut shortest: HashMap<String, usize> = HashMap::new();
        let mut forms: HashMap<String, Element> = HashMap::new();
        for w in &words {
            let key = image(geo.matrices(), w);
            shortest.entry(key.clone()).or_insert(w.len());
            let nf = group.normal_form(w);
            assert_eq!(group.normal_form(nf.word()), nf, "idempotent");
            assert_eq!(image(geo.matrices(), nf.word()), key, "normal form represents the same element");
            let previous = forms.entry(key.clone()).or_insert_with(|| nf.clone());
            assert_eq!(previous, &nf, "equal elements share a normal form");
            assert_eq!(nf.length(), shortest[&key].min(nf.length()));
            assert_eq!(group.is_reduced(w), w.len() == shortest[&key]);
            if group.is_reduced(w) {
                let closure = group.braid_closure(w).unwrap();
                for u in &closure {
                    assert_eq!(&group.normal_form(u), &nf);
                }
                let smallest = closure.iter().min_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b))).unwrap();
                assert_eq!(nf.word(), smallest.as_slice(), "ShortLex-least reduced word");
            }
        }
        for (key, nf) in &forms {
            if shortest[key] <= 6 {
                assert_eq!(nf.length(), shortest[key]);
            }
        }
    }
}

#[test]
fn product_lengths_against_bfs_levels() {
    for graph in [dihedral(4), CoxeterGraph::type_a(3)] {
        let group = CoxeterGroup::new(graph);
        let elements: Vec<Element> = group.enumerate(20, 2000).elements().cloned().collect();
        for a in &elements {
            for b in &elements {
                let ab = group.multiply(a, b, 100).unwrap();
                assert!(ab.length() <= a.length() + b.length());
                let mut word = a.word().to_vec();
                word.extend_from_slice(b.word());
                assert_eq!(ab.length() == a.length() + b.length(), group.is_reduced(&word));
            }
        }
        let inf = CoxeterGroup::new(CoxeterGraph::dihedral(EdgeOrder::Infinite).unwrap());
        let w = inf.normal_form(&[0, 1, 0, 1]);
        assert!(inf.multiply(&w, &w, 6).is_err());
        assert_eq!(inf.multiply(&w, &w, 8).unwrap().length(), 8);
    }
}

#[test]
fn group_orders() {
    for m in 2..=7u32 {
        let e = CoxeterGroup::new(dihedral(m)).enumerate(20, 2000);
        assert!(e.finite);
        assert_eq!(e.total(), 2 * m as usize);
    }
    assert_eq!(CoxeterGroup::new(CoxeterGraph::type_a(3)).enumerate(20, 2000).total(), 24);
    assert_eq!(CoxeterGroup::new(CoxeterGraph::type_d(4)).enumerate(20, 2000).total(), 192);
    let tri = CoxeterGroup::new(CoxeterGraph::affine_a_cycle(3)).enumerate(6, 2000);
    assert!(!tri.finite);
    // Affine A2 grows by 3k elements at length k.
    assert_eq!(tri.level_sizes(), vec![1, 3, 6, 9, 12, 15, 18]);
}

#[test]
fn unique_reduced_expressions_in_dihedral_groups() {
    for m in 2..=7u32 {
        let group = CoxeterGroup::new(dihedral(m));
        let elements: Vec<Element> = group.enumerate(20, 2000).elements().cloned().collect();
        let unique: Vec<&Element> =
            elements.iter().filter(|w| !w.is_identity() && group.unique_reduced_expression(w)).collect();
        assert_eq!(unique.len(), 2 * (m as usize - 1), "m = {m}");
        let w0 = elements.iter().max_by_key(|w| w.length()).unwrap();
        assert!(!unique.contains(&w0));
        assert_eq!(group.reduced_words(w0).len(), 2);
    }
}

#[test]
fn bruhat_recursion_matches_subwords() {
    let mut graphs: Vec<CoxeterGraph> = (2..=5).map(dihedral).collect();
    graphs.push(CoxeterGraph::type_a(3));
    for graph in graphs {
        let group = CoxeterGroup::new(graph);
        let elements: Vec<Element> = group.enumerate(20, 2000).elements().cloned().collect();
        for y in &elements {
            for w in &elements {
                assert_eq!(group.bruhat_leq(y, w), group.bruhat_leq_subword(y, w), "{y:?} <= {w:?}");
            }
        }
    }
}

#[test]
fn descents_and_inverse() {
    let group = CoxeterGroup::new(CoxeterGraph::type_a(3));
    for w in group.enumerate(20, 2000).elements() {
        let (left, right) = group.descents(w);
        let inv = group.inverse(w);
        let (inv_left, inv_right) = group.descents(&inv);
        assert_eq!(left, inv_right);
        assert_eq!(right, inv_left);
        let expected: BTreeSet<usize> =
            (0..3).filter(|&s| group.left_mul_gen(s, w).length() < w.length()).collect();
        assert_eq!(left, expected);
        assert!(group.multiply(w, &inv, 100).unwrap().is_identity());
    }
}

#[test]
fn graph_json_and_flags() {
    let json = serde_json::json!({
        "generators": ["r", "t", "u"],
        "edges": [{"a": "r", "b": "t", "m": 3}, {"a": "t", "b": "u", "m": "inf"}]
    });
    let g = CoxeterGraph::from_json(&json).unwrap();
    assert_eq!(g.order(1, 2), EdgeOrder::Infinite);
    assert_eq!(g.order(0, 2), EdgeOrder::Finite(2));
    assert!(g.connected() && g.is_tree());
    assert_eq!(CoxeterGraph::from_json(&g.to_json()).unwrap(), g);
    assert_eq!(CoxeterGraph::affine_a_cycle(4).cycle_count(), 1);
    let bad = serde_json::json!({"generators": ["r", "r"], "edges": []});
    assert!(CoxeterGraph::from_json(&bad).is_err());
    let bad = serde_json::json!({"generators": ["r", "t"], "edges": [{"a": "r", "b": "t", "m": 1}]});
    assert!(CoxeterGraph::from_json(&bad).is_err());
}

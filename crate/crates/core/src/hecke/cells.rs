use num_bigint::BigInt;

use super::algebra::{dense_mul_gen, Side};
use super::finite::FiniteGroup;
use super::kl::{to_c_basis, KlTable};
use super::structure::StructureConstants;
use crate::arith::LaurentPoly;

/// Two-sided cells and their order under `<=_LR`.
#[derive(Debug, Clone)]
pub struct CellPartition {
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
    /// `below[i][j]`: block `i <=_LR` block `j`.
    below: Vec<Vec<bool>>,
}

impl CellPartition {
    /// Builds the digraph `x -> y` whenever `C_y` occurs in `C_s C_x` or
    /// `C_x C_s`; cells are its strongly connected components.
    pub fn compute(fg: &FiniteGroup, kl: &KlTable) -> Self {
        let n = fg.len();
        let v = LaurentPoly::v();
        let mut edges = vec![Vec::new(); n];
        for (x, out) in edges.iter_mut().enumerate() {
            let cx = kl.c_basis_dense(fg, x);
            for s in 0..fg.rank() {
                for side in [Side::Left, Side::Right] {
                    // C_s = T~_s - v
                    let mut prod = dense_mul_gen(fg, s, &cx, side);
                    for (u, c) in cx.iter().enumerate() {
                        if !c.is_zero() {
                            prod[u] -= &(&v * c);
                        }
                    }
                    out.extend(to_c_basis(fg, kl, prod).into_iter().map(|(y, _)| y));
                }
            }
            out.sort_unstable();
            out.dedup();
        }
        Self::from_edges(&edges)
    }

    fn from_edges(edges: &[Vec<usize>]) -> Self {
        let n = edges.len();
        // reach[x][y]: y <=_LR x
        let mut reach = vec![vec![false; n]; n];
        for (x, row) in reach.iter_mut().enumerate() {
            let mut stack = vec![x];
            row[x] = true;
            while let Some(u) = stack.pop() {
                for &y in &edges[u] {
                    if !row[y] {
                        row[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        let mut block_of = vec![usize::MAX; n];
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            if block_of[x] != usize::MAX {
                continue;
            }
            let block: Vec<usize> = (x..n).filter(|&y| reach[x][y] && reach[y][x]).collect();
            for &y in &block {
                block_of[y] = blocks.len();
            }
            blocks.push(block);
        }
        let below = blocks
            .iter()
            .map(|bi| blocks.iter().map(|bj| reach[bj[0]][bi[0]]).collect())
            .collect();
        Self { blocks, block_of, below }
    }

    /// Blocks in order of their ShortLex-least element.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_of(&self, id: usize) -> usize {
        self.block_of[id]
    }

    /// Whether block `i <=_LR` block `j`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.below[i][j]
    }

    /// Strict relations `(i, j)` with block `i <_LR` block `j`.
    pub fn order_pairs(&self) -> Vec<(usize, usize)> {
        let k = self.blocks.len();
        (0..k)
            .flat_map(|i| (0..k).map(move |j| (i, j)))
            .filter(|&(i, j)| i != j && self.below[i][j])
            .collect()
    }

    /// Covering relations of the block order.
    pub fn hasse_pairs(&self) -> Vec<(usize, usize)> {
        let pairs = self.order_pairs();
        pairs
            .iter()
            .copied()
            .filter(|&(i, j)| !(0..self.blocks.len()).any(|k| k != i && k != j && self.below[i][k] && self.below[k][j]))
            .collect()
    }

    pub fn to_json(&self, fg: &FiniteGroup) -> serde_json::Value {
        let blocks: Vec<Vec<String>> =
            self.blocks.iter().map(|b| b.iter().map(|&id| fg.name(id)).collect()).collect();
        let order: Vec<[usize; 2]> = self.order_pairs().into_iter().map(|(i, j)| [i, j]).collect();
        serde_json::json!({"blocks": blocks, "order": order})
    }

    /// Hasse diagram with edges pointing from the larger block to the smaller.
    pub fn to_dot(&self, fg: &FiniteGroup) -> String {
        let mut out = String::from("digraph cells {\n");
        for (i, b) in self.blocks.iter().enumerate() {
            let names: Vec<String> = b.iter().map(|&id| fg.name(id)).collect();
            out.push_str(&format!("  c{i} [label=\"{{{}}}\"];\n", names.join(", ")));
        }
        for (i, j) in self.hasse_pairs() {
            out.push_str(&format!("  c{j} -> c{i};\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// Matrices of `C_x` on the cell module with basis `{J_y : y in cell}`, with
/// `C_x J_y = sum_{w in cell} h_{x,y,w}(1) J_w`. Entry `[i][j]` is the
/// coefficient of `J_{cell[i]}` in `C_x J_{cell[j]}`. Indexed by `x`'s id.
pub fn cell_rep_matrices(cell: &[usize], h: &StructureConstants) -> Vec<Vec<Vec<BigInt>>> {
    (0..h.len())
        .map(|x| {
            cell.iter()
                .map(|&w| cell.iter().map(|&y| h.get(x, y, w).evaluate_at_one()).collect())
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{CoxeterGraph, EdgeOrder};
    use crate::hecke::Caps;

    #[test]
    fn d3_cells() {
        let fg = FiniteGroup::new(CoxeterGraph::dihedral(EdgeOrder::Finite(3)).unwrap(), Caps::default()).unwrap();
        let kl = KlTable::compute(&fg);
        let cells = CellPartition::compute(&fg, &kl);
        assert_eq!(cells.blocks(), &[vec![0], vec![1, 2, 3, 4], vec![5]]);
        assert_eq!(cells.order_pairs(), vec![(1, 0), (2, 0), (2, 1)]);
        assert_eq!(cells.hasse_pairs(), vec![(1, 0), (2, 1)]);
        let json = cells.to_json(&fg);
        assert_eq!(json["blocks"][2], serde_json::json!(["rtr"]));
        assert!(cells.to_dot(&fg).contains("c1 -> c2;"));
    }
}

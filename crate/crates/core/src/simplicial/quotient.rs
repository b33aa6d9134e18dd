use std::collections::{BTreeSet, HashMap};

use super::{staircases, ChainComplex, OrderedComplex};
use crate::error::{Error, Result};
use crate::exactq::SparseIntMatrix;

/// `(base × fiber) / ~` where `(x, y) ~ (x, y')` for `x` in `sub`, as the
/// normalized chain complex of the quotient simplicial set.
///
/// The cells are the staircase simplices of `base × fiber` whose base
/// projection is not in `sub`, followed in each degree by the simplices of
/// `sub`. A face that lands over `sub` is replaced by its base projection,
/// which vanishes when that projection repeats a vertex.
pub fn collapse_fibers(base: &OrderedComplex, sub: &OrderedComplex, fiber: &OrderedComplex) -> Result<ChainComplex> {
    if sub.vertex_count() != base.vertex_count() || !sub.is_subcomplex_of(base) {
        return Err(Error::NotSubcomplex("collapse set is not a subcomplex of the base".into()));
    }
    let mut product_cells: Vec<Vec<Vec<(usize, usize)>>> = Vec::new();
    for s in base.iter().filter(|s| !sub.contains(s)) {
        for t in fiber.iter() {
            staircases(s, t, |path| {
                if product_cells.len() < path.len() {
                    product_cells.resize(path.len(), Vec::new());
                }
                product_cells[path.len() - 1].push(path.to_vec());
            });
        }
    }
    let top = product_cells.len().max(sub.dim().map_or(0, |d| d + 1));
    product_cells.resize(top, Vec::new());
    let index: Vec<HashMap<&[(usize, usize)], usize>> = product_cells
        .iter()
        .map(|cells| cells.iter().enumerate().map(|(i, c)| (c.as_slice(), i)).collect())
        .collect();
    let sizes: Vec<usize> = (0..top).map(|d| product_cells[d].len() + sub.simplices(d).len()).collect();

    let mut boundaries = vec![SparseIntMatrix::new(0, sizes.first().copied().unwrap_or(0))];
    for d in 1..top {
        let offset = product_cells[d - 1].len();
        let mut b = SparseIntMatrix::new(sizes[d - 1], sizes[d]);
        for (col, cell) in product_cells[d].iter().enumerate() {
            for i in 0..cell.len() {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                let face: Vec<(usize, usize)> =
                    cell.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &p)| p).collect();
                let proj: Vec<usize> = face.iter().map(|p| p.0).collect::<BTreeSet<_>>().into_iter().collect();
                if sub.contains(&proj) {
                    if proj.len() == face.len() {
                        let r = sub.index_of(&proj).expect("present");
                        b.add_entry(offset + r, col, sign);
                    }
                } else {
                    let r = index[d - 1][face.as_slice()];
                    b.add_entry(r, col, sign);
                }
            }
        }
        let shift = product_cells[d].len();
        for (c, s) in sub.simplices(d).iter().enumerate() {
            for i in 0..s.len() {
                let mut f = s.clone();
                f.remove(i);
                let r = sub.index_of(&f).expect("sub is downward closed");
                b.add_entry(offset + r, shift + c, if i % 2 == 0 { 1 } else { -1 });
            }
        }
        boundaries.push(b);
    }
    if top == 0 {
        boundaries.clear();
    }
    Ok(ChainComplex::new(sizes, boundaries))
}

//! Padding a Go-diagram to the identity permutation, and truncating back.

use deodhar_core::diagram::{Cell, Config, Filling, GoDiagram, Partition, Tile};
use serde::{Deserialize, Serialize};

use crate::promote::{find_pair, promote};
use crate::ClosureError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PadSide {
    /// A full-width row above the box.
    Top,
    /// A full-height column left of the box.
    Left,
}

impl PadSide {
    pub fn name(self) -> &'static str {
        match self {
            PadSide::Top => "top",
            PadSide::Left => "left",
        }
    }
}

/// Add one row or column, filling the new cells with elbows except where that
/// would create configuration B.
fn pad_once(d: &GoDiagram, side: PadSide) -> Result<GoDiagram, ClosureError> {
    let shape = d.shape();
    let (k, n) = (shape.k(), shape.n());
    let old = d.filling().tiles();
    let (parts, tiles, new_cells): (Vec<usize>, Vec<Vec<Tile>>, Vec<Cell>) = match side {
        PadSide::Top => {
            let mut parts = vec![n - k];
            parts.extend_from_slice(shape.parts());
            let mut tiles = vec![vec![Tile::Elbow; n - k]];
            tiles.extend(old.iter().cloned());
            (parts, tiles, (0..n - k).rev().map(|c| Cell::new(0, c)).collect())
        }
        PadSide::Left => {
            let parts: Vec<usize> = (0..k).map(|r| shape.row_len(r) + 1).collect();
            let tiles: Vec<Vec<Tile>> = (0..k)
                .map(|r| {
                    let mut row = vec![Tile::Elbow];
                    row.extend(old.get(r).into_iter().flatten().copied());
                    row
                })
                .collect();
            (parts, tiles, (0..k).rev().map(|r| Cell::new(r, 0)).collect())
        }
    };
    let (k2, n2) = if side == PadSide::Top { (k + 1, n + 1) } else { (k, n + 1) };
    let mut f = Filling::new(Partition::new(parts, k2, n2)?, tiles)?;
    for cell in new_cells {
        if f.trace().config_at(cell) == Config::B {
            f.set(cell, Tile::Crossing);
        }
    }
    Ok(GoDiagram::from_filling(&f)?)
}

/// Sides to pad next, from the first descent on the north-west boundary.
fn next_sides(d: &GoDiagram) -> Option<Vec<PadSide>> {
    let nw = &d.trace().nw_labels;
    let north = d.shape().n() - d.shape().k();
    let i = (0..nw.len().saturating_sub(1)).find(|&i| nw[i] > nw[i + 1])?;
    Some(if i + 1 < north {
        vec![PadSide::Top]
    } else if i >= north {
        vec![PadSide::Left]
    } else {
        vec![PadSide::Top, PadSide::Left]
    })
}

/// Pad until the permutation is the identity; returns the padded diagram and the
/// sides used, in order.
pub fn pad(d: &GoDiagram) -> Result<(GoDiagram, Vec<PadSide>), ClosureError> {
    let mut cur = d.clone();
    let mut steps = Vec::new();
    while let Some(sides) = next_sides(&cur) {
        let before = cur.trace().perm.length();
        for s in sides {
            cur = pad_once(&cur, s)?;
            steps.push(s);
        }
        if cur.trace().perm.length() >= before {
            return Err(ClosureError::PaddingStuck);
        }
    }
    Ok((cur, steps))
}

/// Remove the top row or the left column of the box.
pub fn truncate(d: &GoDiagram, side: PadSide) -> Result<GoDiagram, ClosureError> {
    let shape = d.shape();
    let (k, n) = (shape.k(), shape.n());
    let tiles = d.filling().tiles();
    let (parts, tiles, k2) = match side {
        PadSide::Top => (shape.parts().iter().skip(1).copied().collect::<Vec<_>>(), tiles[1.min(tiles.len())..].to_vec(), k - 1),
        PadSide::Left => {
            let parts: Vec<usize> = shape.parts().iter().map(|&p| p.saturating_sub(1)).collect();
            let tiles: Vec<Vec<Tile>> = tiles.iter().map(|row| row.iter().skip(1).copied().collect()).collect();
            (parts, tiles, k)
        }
    };
    let shape = Partition::new(parts, k2, n - 1)?;
    let tiles = tiles.into_iter().take(shape.num_rows()).collect();
    Ok(GoDiagram::from_filling(&Filling::new(shape, tiles)?)?)
}

fn shift(c: Cell, steps: &[PadSide]) -> Cell {
    let top = steps.iter().filter(|&&s| s == PadSide::Top).count();
    let left = steps.len() - top;
    Cell::new(c.row + top, c.col + left)
}

/// A closure instance together with its padding.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PaddedInstance {
    pub steps: Vec<PadSide>,
    pub d_prime: GoDiagram,
    pub d: GoDiagram,
    pub c: Cell,
    pub c_prime: Cell,
    /// Both diagrams padded with the same sides, the padded `D` is the promotion
    /// of the padded `D′`, and truncation recovers the originals.
    pub consistent: bool,
}

pub fn pad_instance(d_prime: &GoDiagram, c: Cell, c_prime: Cell) -> Result<PaddedInstance, ClosureError> {
    find_pair(d_prime, c, c_prime)?;
    let d = promote(d_prime, c, c_prime)?;
    let (pd_prime, steps) = pad(d_prime)?;
    let (pd, steps_d) = pad(&d)?;
    let (pc, pcp) = (shift(c, &steps), shift(c_prime, &steps));
    let promoted = promote(&pd_prime, pc, pcp)?;
    let undo = |mut x: GoDiagram| -> Result<GoDiagram, ClosureError> {
        for &s in steps.iter().rev() {
            x = truncate(&x, s)?;
        }
        Ok(x)
    };
    let consistent = steps == steps_d
        && promoted == pd
        && undo(pd_prime.clone())? == *d_prime
        && undo(pd.clone())? == d;
    Ok(PaddedInstance { steps, d_prime: pd_prime, d: pd, c: pc, c_prime: pcp, consistent })
}

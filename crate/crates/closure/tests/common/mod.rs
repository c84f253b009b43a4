#![allow(dead_code)]

use deodhar_core::algebra::{Family, Laurent, Poly, Ring};
use deodhar_core::diagram::{classify, Cell, Filling, GoDiagram, Partition, Tile};

/// West and north exits of the 5×4 example `D′`, top row first.
pub const EXAMPLE_SIGMA_D_PRIME: [[(usize, usize); 4]; 5] = [
    [(5, 4), (5, 3), (3, 2), (2, 1)],
    [(6, 4), (6, 5), (6, 3), (6, 2)],
    [(7, 4), (4, 5), (4, 3), (3, 6)],
    [(8, 7), (7, 5), (5, 4), (4, 6)],
    [(9, 8), (8, 7), (7, 5), (5, 6)],
];

pub const EXAMPLE_SIGMA_D: [[(usize, usize); 4]; 5] = [
    [(5, 4), (5, 3), (3, 2), (2, 1)],
    [(6, 4), (6, 5), (5, 3), (5, 2)],
    [(7, 4), (4, 6), (4, 3), (3, 5)],
    [(8, 7), (7, 6), (6, 4), (4, 5)],
    [(9, 8), (8, 7), (7, 6), (6, 5)],
];

pub const EXAMPLE_C: Cell = Cell { row: 4, col: 3 };
pub const EXAMPLE_C_PRIME: Cell = Cell { row: 1, col: 1 };

/// Rebuild a diagram from its table of west and north exits: a cell is a crossing
/// exactly when the pipe entering from the east leaves to the west.
pub fn from_sigma(shape: Partition, sigma: &[Vec<(usize, usize)>]) -> GoDiagram {
    let (rows, _) = shape.boundary_labels();
    let mut tiles = Vec::new();
    for (r, row) in sigma.iter().enumerate() {
        let mut line = vec![Tile::Elbow; row.len()];
        for c in (0..row.len()).rev() {
            let east = if c + 1 == row.len() { rows[r] } else { row[c + 1].0 };
            if row[c].0 == east {
                line[c] = Tile::Crossing;
            }
        }
        tiles.push(line);
    }
    classify(&Filling::new(shape, tiles).unwrap()).diagram().expect("Go-diagram")
}

pub fn example_d_prime() -> GoDiagram {
    let sigma: Vec<Vec<_>> = EXAMPLE_SIGMA_D_PRIME.iter().map(|r| r.to_vec()).collect();
    from_sigma(Partition::rectangle(5, 9), &sigma)
}

pub fn g(l: u32) -> Poly {
    Laurent::sym(Family::Gamma, l)
}

pub fn b(l: u32) -> Poly {
    Laurent::sym(Family::Beta, l)
}

pub fn int(v: i64) -> Poly {
    Poly::int(v)
}

pub fn div(a: &Poly, d: &Poly) -> Poly {
    a.div(d).unwrap()
}

pub fn sum(ps: &[Poly]) -> Poly {
    ps.iter().fold(Poly::zero(), |acc, p| acc.add(p))
}

use serde::{Deserialize, Serialize};

use super::{Cell, DiagramError, Partition};
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Tile {
    Elbow,
    Crossing,
}

impl Tile {
    pub fn symbol(self) -> char {
        match self {
            Tile::Elbow => 'e',
            Tile::Crossing => 'x',
        }
    }
}

/// Local state of the two pipes entering a cell.
///
/// `A`: elbow, east pipe lower. `B`: elbow, east pipe higher.
/// `C`: crossing, east pipe lower. `D`: crossing, east pipe higher.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Config {
    A,
    B,
    C,
    D,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Edge {
    North,
    South,
    East,
    West,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Filling {
    shape: Partition,
    tiles: Vec<Vec<Tile>>,
}

impl Filling {
    pub fn new(shape: Partition, tiles: Vec<Vec<Tile>>) -> Result<Self, DiagramError> {
        if tiles.len() != shape.num_rows()
            || tiles.iter().enumerate().any(|(r, row)| row.len() != shape.row_len(r))
        {
            return Err(DiagramError::ShapeMismatch);
        }
        Ok(Filling { shape, tiles })
    }

    pub fn uniform(shape: &Partition, tile: Tile) -> Self {
        let tiles = shape.parts().iter().map(|&len| vec![tile; len]).collect();
        Filling { shape: shape.clone(), tiles }
    }

    /// Crossings exactly at `cells`.
    pub fn with_crossings(shape: &Partition, cells: &[Cell]) -> Result<Self, DiagramError> {
        let mut f = Self::uniform(shape, Tile::Elbow);
        for &c in cells {
            if !shape.contains(c) {
                return Err(DiagramError::CellOutOfShape(c));
            }
            f.tiles[c.row][c.col] = Tile::Crossing;
        }
        Ok(f)
    }

    /// Bit `m` of `mask` is the tile of the `m`-th cell in row-major order.
    pub fn from_mask(shape: &Partition, mask: u64) -> Self {
        let mut f = Self::uniform(shape, Tile::Elbow);
        for (m, c) in shape.cells().into_iter().enumerate() {
            if mask >> m & 1 == 1 {
                f.tiles[c.row][c.col] = Tile::Crossing;
            }
        }
        f
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn tile(&self, c: Cell) -> Tile {
        self.tiles[c.row][c.col]
    }

    pub fn tiles(&self) -> &[Vec<Tile>] {
        &self.tiles
    }

    pub fn set(&mut self, c: Cell, t: Tile) {
        self.tiles[c.row][c.col] = t;
    }

    pub fn trace(&self) -> PipeTrace {
        trace(self)
    }
}

/// One step of a pipe through a cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RouteStep {
    pub cell: Cell,
    pub entry: Edge,
    pub exit: Edge,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipeTrace {
    /// `routes[p - 1]`: the cells pipe `p` visits, south-east to north-west.
    pub routes: Vec<Vec<RouteStep>>,
    pub config: Vec<Vec<Config>>,
    /// Pipe leaving through the west edge of each cell.
    pub west_exit: Vec<Vec<usize>>,
    /// Pipe leaving through the north edge of each cell.
    pub north_exit: Vec<Vec<usize>>,
    /// Labels read on the north-west box boundary: north edges right to left, then
    /// west edges top to bottom.
    pub nw_labels: Vec<usize>,
    /// West boundary labels top to bottom, `v_1..v_k`.
    pub west_labels: Vec<usize>,
    /// North boundary labels, indexed by column.
    pub north_labels: Vec<usize>,
    pub perm: Permutation,
}

impl PipeTrace {
    pub fn config_at(&self, c: Cell) -> Config {
        self.config[c.row][c.col]
    }

    /// `(west exit, north exit)` at `c`.
    pub fn exits(&self, c: Cell) -> (usize, usize) {
        (self.west_exit[c.row][c.col], self.north_exit[c.row][c.col])
    }

    /// `(east pipe, south pipe)` entering `c`.
    pub fn entries(&self, c: Cell) -> (usize, usize) {
        let (w, nn) = self.exits(c);
        match self.config_at(c) {
            Config::C | Config::D => (w, nn),
            Config::A | Config::B => (nn, w),
        }
    }

    pub fn first_config(&self, target: Config) -> Option<Cell> {
        self.config.iter().enumerate().find_map(|(r, row)| {
            row.iter().position(|&c| c == target).map(|c| Cell::new(r, c))
        })
    }
}

pub fn trace(filling: &Filling) -> PipeTrace {
    let shape = filling.shape();
    let (k, n) = (shape.k(), shape.n());
    let (row_labels, col_labels) = shape.boundary_labels();
    let mut west: Vec<Vec<usize>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
    let mut north = west.clone();
    let mut config: Vec<Vec<Config>> = shape.parts().iter().map(|&l| vec![Config::A; l]).collect();
    let mut routes = vec![Vec::new(); n];
    for r in (0..shape.num_rows()).rev() {
        let len = shape.row_len(r);
        for c in (0..len).rev() {
            let e = if c + 1 == len { row_labels[r] } else { west[r][c + 1] };
            let s = if shape.contains(Cell::new(r + 1, c)) { north[r + 1][c] } else { col_labels[c] };
            let cell = Cell::new(r, c);
            let (w, nn, cfg) = match filling.tile(cell) {
                Tile::Crossing => (e, s, if e < s { Config::C } else { Config::D }),
                Tile::Elbow => (s, e, if e < s { Config::A } else { Config::B }),
            };
            west[r][c] = w;
            north[r][c] = nn;
            config[r][c] = cfg;
            routes[e - 1].push(RouteStep {
                cell,
                entry: Edge::East,
                exit: if w == e { Edge::West } else { Edge::North },
            });
            routes[s - 1].push(RouteStep {
                cell,
                entry: Edge::South,
                exit: if w == s { Edge::West } else { Edge::North },
            });
        }
    }
    let north_labels: Vec<usize> = (0..n - k)
        .map(|c| if shape.row_len(0) > c { north[0][c] } else { col_labels[c] })
        .collect();
    let west_labels: Vec<usize> =
        (0..k).map(|r| if shape.row_len(r) > 0 { west[r][0] } else { row_labels[r] }).collect();
    let nw_labels: Vec<usize> = north_labels.iter().rev().chain(west_labels.iter()).copied().collect();
    let perm = Permutation::from_images(nw_labels.clone()).expect("pipes are a bijection");
    PipeTrace {
        routes,
        config,
        west_exit: west,
        north_exit: north,
        nw_labels,
        west_labels,
        north_labels,
        perm,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sq() -> Partition {
        Partition::rectangle(3, 6)
    }

    #[test]
    fn all_elbow_is_identity() {
        let t = Filling::uniform(&sq(), Tile::Elbow).trace();
        assert!(t.perm.is_identity());
        assert!(t.config.iter().flatten().all(|&c| c == Config::A));
        assert_eq!(t.west_labels, vec![4, 5, 6]);
    }

    #[test]
    fn all_crossing_is_grassmannian() {
        let t = Filling::uniform(&sq(), Tile::Crossing).trace();
        assert_eq!(t.perm.to_string(), "456123");
    }

    #[test]
    fn diagonal_crossings() {
        let cells = [Cell::new(0, 0), Cell::new(1, 1), Cell::new(2, 2)];
        let t = Filling::with_crossings(&sq(), &cells).unwrap().trace();
        assert_eq!(t.perm.to_string(), "124356");
        let cfg: Vec<Config> = cells.iter().map(|&c| t.config_at(c)).collect();
        assert_eq!(cfg, vec![Config::C, Config::D, Config::C]);
    }

    #[test]
    fn corner_crossings_give_b() {
        let t = Filling::with_crossings(&sq(), &[Cell::new(0, 0), Cell::new(2, 2)]).unwrap().trace();
        assert!(t.perm.is_identity());
        assert_eq!(t.config_at(Cell::new(1, 1)), Config::B);
    }

    #[test]
    fn routes_cover_every_cell_twice() {
        let f = Filling::from_mask(&sq(), 0b101100110);
        let t = f.trace();
        let total: usize = t.routes.iter().map(Vec::len).sum();
        assert_eq!(total, 18);
        for route in &t.routes {
            for w in route.windows(2) {
                assert!(w[0].cell.precedes(w[1].cell));
            }
        }
    }
}

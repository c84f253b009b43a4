use serde::{Deserialize, Serialize};

use super::{Cell, DiagramError, Partition};

/// A labelling of the cells by `1..=|λ|` decreasing to the right and downwards.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ReadingOrder {
    /// Per row, per column.
    labels: Vec<Vec<usize>>,
}

/// Which canonical reading order to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ReadingKind {
    RowMajor,
    ColumnMajor,
}

impl ReadingKind {
    pub fn build(self, shape: &Partition) -> ReadingOrder {
        match self {
            ReadingKind::RowMajor => ReadingOrder::row_major(shape),
            ReadingKind::ColumnMajor => ReadingOrder::column_major(shape),
        }
    }
}

impl ReadingOrder {
    pub fn new(shape: &Partition, labels: Vec<Vec<usize>>) -> Result<Self, DiagramError> {
        let bad = |m: &str| DiagramError::InvalidReadingOrder(m.to_string());
        if labels.len() != shape.num_rows()
            || labels.iter().enumerate().any(|(r, row)| row.len() != shape.row_len(r))
        {
            return Err(bad("label grid does not match shape"));
        }
        let size = shape.size();
        let mut seen = vec![false; size + 1];
        for &l in labels.iter().flatten() {
            if l == 0 || l > size || seen[l] {
                return Err(bad("labels are not a bijection onto 1..=|λ|"));
            }
            seen[l] = true;
        }
        for cell in shape.cells() {
            let here = labels[cell.row][cell.col];
            if cell.col + 1 < shape.row_len(cell.row) && labels[cell.row][cell.col + 1] >= here {
                return Err(bad("labels must decrease along rows"));
            }
            if shape.contains(Cell::new(cell.row + 1, cell.col)) && labels[cell.row + 1][cell.col] >= here {
                return Err(bad("labels must decrease down columns"));
            }
        }
        Ok(ReadingOrder { labels })
    }

    /// Rows top to bottom, each left to right, counting down from `|λ|`.
    pub fn row_major(shape: &Partition) -> Self {
        let mut next = shape.size();
        let labels = (0..shape.num_rows())
            .map(|r| {
                (0..shape.row_len(r))
                    .map(|_| {
                        next -= 1;
                        next + 1
                    })
                    .collect()
            })
            .collect();
        ReadingOrder { labels }
    }

    /// Columns left to right, each top to bottom, counting down from `|λ|`.
    pub fn column_major(shape: &Partition) -> Self {
        let mut labels: Vec<Vec<usize>> = (0..shape.num_rows()).map(|r| vec![0; shape.row_len(r)]).collect();
        let mut next = shape.size();
        for c in 0..shape.row_len(0) {
            for row in labels.iter_mut().take(shape.col_len(c)) {
                row[c] = next;
                next -= 1;
            }
        }
        ReadingOrder { labels }
    }

    pub fn label(&self, cell: Cell) -> usize {
        self.labels[cell.row][cell.col]
    }

    pub fn labels(&self) -> &[Vec<usize>] {
        &self.labels
    }

    pub fn size(&self) -> usize {
        self.labels.iter().map(Vec::len).sum()
    }

    /// Cells from the highest label down.
    pub fn cells_descending(&self) -> Vec<Cell> {
        let mut cells: Vec<(usize, Cell)> = self
            .labels
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, &l)| (l, Cell::new(r, c))))
            .collect();
        cells.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        cells.into_iter().map(|(_, c)| c).collect()
    }

    /// Cells from label 1 up; this is the order of the reduced word.
    pub fn cells_ascending(&self) -> Vec<Cell> {
        let mut cells = self.cells_descending();
        cells.reverse();
        cells
    }

    /// The cell carrying `label`.
    pub fn cell(&self, label: usize) -> Option<Cell> {
        self.labels.iter().enumerate().find_map(|(r, row)| {
            row.iter().position(|&l| l == label).map(|c| Cell::new(r, c))
        })
    }
}

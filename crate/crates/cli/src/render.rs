//! ASCII and SVG drawings of a pipe dream.

use std::fmt::Write;

use deodhar_core::diagram::{classify, Cell, Filling, Stone, Tile};

const CROSS: &str = "─┼─";
const ELBOW: &str = "╮ ╰";

fn south_rows(f: &Filling) -> Vec<Vec<usize>> {
    // south_rows[r]: columns whose bottom edge lies below row r
    let shape = f.shape();
    let mut out = vec![Vec::new(); shape.k()];
    for c in 0..shape.n() - shape.k() {
        let len = shape.col_len(c);
        if len > 0 {
            out[len - 1].push(c);
        }
    }
    out
}

/// Glyph grid with the north/west exit labels and the south-east boundary labels.
pub fn ascii(f: &Filling) -> String {
    let shape = f.shape();
    let t = f.trace();
    let (east, south) = shape.boundary_labels();
    let below = south_rows(f);
    let mut out = String::new();
    let top: String = (0..shape.row_len(0)).map(|c| format!("{:^3}", t.north_labels[c])).collect();
    let _ = writeln!(out, "{}", format!("   {top}").trim_end());
    for r in 0..shape.k() {
        let cells: String = (0..shape.row_len(r))
            .map(|c| if f.tile(Cell::new(r, c)) == Tile::Crossing { CROSS } else { ELBOW })
            .collect();
        let _ = writeln!(out, "{:>2} {} {}", t.west_labels[r], cells, east[r]);
        if !below[r].is_empty() {
            let mut line = vec![' '; 3 + 3 * shape.row_len(0)];
            for &c in &below[r] {
                for (j, ch) in format!("{:^3}", south[c]).chars().enumerate() {
                    line[3 + 3 * c + j] = ch;
                }
            }
            let _ = writeln!(out, "{}", line.into_iter().collect::<String>().trim_end());
        }
    }
    if let Some(d) = classify(f).diagram() {
        out.push('\n');
        for row in d.stone_rows() {
            let _ = writeln!(out, "{row}");
        }
    }
    out
}

const UNIT: usize = 40;
const MARGIN: usize = 30;
const LOW: &str = r##"stroke="#d62728" stroke-width="3""##;
const HIGH: &str = r##"stroke="#1f77b4" stroke-width="2""##;

/// Pipes as paths (at each cell the lower-labelled pipe in red, the other in
/// blue), `∘`/`•` as hollow/filled markers, boundary labels as text.
pub fn svg(f: &Filling) -> String {
    let shape = f.shape();
    let t = f.trace();
    let (east, south) = shape.boundary_labels();
    let cols = shape.n() - shape.k();
    let (w, h) = (2 * MARGIN + UNIT * cols.max(1), 2 * MARGIN + UNIT * shape.k());
    let stones = classify(f).diagram();
    let mut s = String::new();
    let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#);
    let _ = writeln!(s, r#"<g font-family="monospace" font-size="12" text-anchor="middle" fill="none">"#);
    for cell in shape.cells() {
        let (x, y) = (MARGIN + UNIT * cell.col, MARGIN + UNIT * cell.row);
        let half = UNIT / 2;
        let _ = writeln!(s, r##"<rect x="{x}" y="{y}" width="{UNIT}" height="{UNIT}" stroke="#bbbbbb"/>"##);
        let (e, so) = t.entries(cell);
        let (se, ss) = if e < so { (LOW, HIGH) } else { (HIGH, LOW) };
        if f.tile(cell) == Tile::Crossing {
            let _ = writeln!(s, r#"<path d="M{} {} H{x}" {se}/>"#, x + UNIT, y + half);
            let _ = writeln!(s, r#"<path d="M{} {} V{y}" {ss}/>"#, x + half, y + UNIT);
        } else {
            let _ = writeln!(s, r#"<path d="M{} {} A{half} {half} 0 0 0 {} {y}" {se}/>"#, x + UNIT, y + half, x + half);
            let _ = writeln!(s, r#"<path d="M{} {} A{half} {half} 0 0 0 {x} {}" {ss}/>"#, x + half, y + UNIT, y + half);
        }
        if let Some(d) = &stones {
            let fill = match d.stone(cell) {
                Stone::White => Some("#ffffff"),
                Stone::Black => Some("#000000"),
                Stone::Plus => None,
            };
            if let Some(fill) = fill {
                let _ = writeln!(s, r#"<circle cx="{}" cy="{}" r="6" fill="{fill}" stroke="black"/>"#, x + half, y + half);
            }
        }
    }
    let text = |s: &mut String, x: usize, y: usize, label: usize| {
        let _ = writeln!(s, r#"<text x="{x}" y="{y}" fill="black">{label}</text>"#);
    };
    for r in 0..shape.k() {
        let y = MARGIN + UNIT * r + UNIT / 2 + 4;
        text(&mut s, MARGIN + UNIT * shape.row_len(r) + 12, y, east[r]);
        text(&mut s, MARGIN - 12, y, t.west_labels[r]);
    }
    for c in 0..cols {
        let x = MARGIN + UNIT * c + UNIT / 2;
        text(&mut s, x, MARGIN + UNIT * shape.col_len(c) + 16, south[c]);
        if c < shape.row_len(0) {
            text(&mut s, x, MARGIN - 8, t.north_labels[c]);
        }
    }
    s.push_str("</g>\n</svg>\n");
    s
}

//! Text and JSON diagram formats.
//!
//! Text: one line per nonempty row from the top, `+ o *` for stones or `x e` for
//! tiles. Rows may also be separated by `/`. An optional first line `k=3 n=6`
//! fixes the box; otherwise the minimal box is used.

use serde::{Deserialize, Serialize};

use super::{classify, Classification, DiagramError, Filling, GoDiagram, Partition, Stone, Tile};

/// Parsed input: either a validated stone diagram or a raw filling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Parsed {
    Stones(GoDiagram),
    Tiles(Filling),
}

impl Parsed {
    pub fn filling(&self) -> &Filling {
        match self {
            Parsed::Stones(d) => d.filling(),
            Parsed::Tiles(f) => f,
        }
    }

    /// Go-diagram, classifying raw tiles if needed.
    pub fn into_go(self) -> Result<GoDiagram, DiagramError> {
        match self {
            Parsed::Stones(d) => Ok(d),
            Parsed::Tiles(f) => GoDiagram::from_filling(&f),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub n: usize,
    pub k: usize,
    pub shape: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub stones: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub tiles: Option<Vec<Vec<String>>>,
}

fn bad(msg: impl Into<String>) -> DiagramError {
    DiagramError::Parse(msg.into())
}

fn build(shape: Partition, rows: &[Vec<char>]) -> Result<Parsed, DiagramError> {
    let all: Vec<char> = rows.iter().flatten().copied().collect();
    if all.iter().all(|&c| Stone::from_symbol(c).is_some()) {
        let stones = rows.iter().map(|r| r.iter().map(|&c| Stone::from_symbol(c).unwrap()).collect()).collect();
        return GoDiagram::from_stones(shape, stones).map(Parsed::Stones);
    }
    if all.iter().all(|&c| c == 'x' || c == 'e') {
        let tiles = rows
            .iter()
            .map(|r| r.iter().map(|&c| if c == 'x' { Tile::Crossing } else { Tile::Elbow }).collect())
            .collect();
        return Filling::new(shape, tiles).map(Parsed::Tiles);
    }
    Err(bad("cells must be all of '+o*' or all of 'xe'"))
}

pub fn parse_text(src: &str) -> Result<Parsed, DiagramError> {
    let mut box_dims = None;
    let mut rows: Vec<Vec<char>> = Vec::new();
    for raw in src.lines().flat_map(|l| l.split('/')) {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if line.contains('=') {
            if !rows.is_empty() || box_dims.is_some() {
                return Err(bad("box header must come first"));
            }
            box_dims = Some(parse_header(line)?);
            continue;
        }
        rows.push(line.chars().filter(|c| !c.is_whitespace()).collect());
    }
    let parts: Vec<usize> = rows.iter().map(Vec::len).collect();
    let shape = match box_dims {
        Some((k, n)) => Partition::new(parts, k, n)?,
        None => Partition::minimal(parts)?,
    };
    build(shape, &rows)
}

fn parse_header(line: &str) -> Result<(usize, usize), DiagramError> {
    let (mut k, mut n) = (None, None);
    for tok in line.trim_start_matches('#').split_whitespace() {
        let (key, val) = tok.split_once('=').ok_or_else(|| bad(format!("bad header token {tok:?}")))?;
        let v: usize = val.parse().map_err(|_| bad(format!("bad number in {tok:?}")))?;
        match key {
            "k" => k = Some(v),
            "n" => n = Some(v),
            _ => return Err(bad(format!("unknown header key {key:?}"))),
        }
    }
    match (k, n) {
        (Some(k), Some(n)) => Ok((k, n)),
        _ => Err(bad("header needs both k and n")),
    }
}

pub fn parse_json(src: &str) -> Result<Parsed, DiagramError> {
    let j: DiagramJson = serde_json::from_str(src).map_err(|e| bad(e.to_string()))?;
    let shape = Partition::new(j.shape.clone(), j.k, j.n)?;
    let grid = match (&j.stones, &j.tiles) {
        (Some(g), None) | (None, Some(g)) => g,
        _ => return Err(bad("exactly one of \"stones\" or \"tiles\" is required")),
    };
    let mut rows = Vec::new();
    for row in grid {
        let mut chars = Vec::new();
        for cell in row {
            let mut it = cell.chars();
            match (it.next(), it.next()) {
                (Some(c), None) => chars.push(c),
                _ => return Err(bad(format!("cell {cell:?} is not one symbol"))),
            }
        }
        rows.push(chars);
    }
    let parsed = build(shape, &rows)?;
    match (&parsed, j.stones.is_some()) {
        (Parsed::Stones(_), true) | (Parsed::Tiles(_), false) => Ok(parsed),
        _ => Err(bad("symbols do not match the field name")),
    }
}

/// JSON if the input starts with `{`, text otherwise.
pub fn parse_any(src: &str) -> Result<Parsed, DiagramError> {
    if src.trim_start().starts_with('{') {
        parse_json(src)
    } else {
        parse_text(src)
    }
}

pub fn to_json(d: &GoDiagram) -> DiagramJson {
    let shape = d.shape();
    DiagramJson {
        n: shape.n(),
        k: shape.k(),
        shape: shape.parts().to_vec(),
        stones: Some(d.stones().iter().map(|r| r.iter().map(|s| s.symbol().to_string()).collect()).collect()),
        tiles: None,
    }
}

pub fn filling_to_json(f: &Filling) -> DiagramJson {
    let shape = f.shape();
    DiagramJson {
        n: shape.n(),
        k: shape.k(),
        shape: shape.parts().to_vec(),
        stones: None,
        tiles: Some(f.tiles().iter().map(|r| r.iter().map(|t| t.symbol().to_string()).collect()).collect()),
    }
}

/// Stone rows if Go, tile rows otherwise, with a box header.
pub fn to_text(f: &Filling) -> String {
    let shape = f.shape();
    let mut out = format!("k={} n={}\n", shape.k(), shape.n());
    let rows: Vec<String> = match classify(f) {
        Classification::NotGo { .. } => f.tiles().iter().map(|r| r.iter().map(|t| t.symbol()).collect()).collect(),
        Classification::Go(d) | Classification::Le(d) => d.stone_rows(),
    };
    for r in rows {
        out.push_str(&r);
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const RUNNING: &str =
        r#"{"n":6,"k":3,"shape":[3,3,3],"stones":[["+","+","+"],["+","*","+"],["+","+","o"]]}"#;

    #[test]
    fn running_json_round_trip() {
        let d = parse_json(RUNNING).unwrap().into_go().unwrap();
        assert_eq!(serde_json::to_string(&to_json(&d)).unwrap(), RUNNING);
    }

    #[test]
    fn inline_text() {
        let d = parse_text("+++ / +*+ / ++o").unwrap().into_go().unwrap();
        assert_eq!(d.shape().n(), 6);
        let t = to_text(d.filling());
        assert_eq!(parse_text(&t).unwrap().into_go().unwrap(), d);
    }

    #[test]
    fn header_sets_box() {
        let p = parse_text("k=2 n=5\nee\ne").unwrap();
        assert_eq!((p.filling().shape().k(), p.filling().shape().n()), (2, 5));
        assert!(parse_text("k=2\nee").is_err());
        assert!(parse_text("+x").is_err());
    }
}

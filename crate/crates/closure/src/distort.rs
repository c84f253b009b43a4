//! The D′-distortion engine.

use std::collections::HashMap;
use std::fmt;

use deodhar_core::algebra::coeff::rational_mod;
use deodhar_core::algebra::{transvection, Family, Fp, Laurent, Matrix, Poly, Ring, Var};
use deodhar_core::diagram::{Cell, GoDiagram, ReadingOrder, Stone};
use deodhar_networks::cell_label;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::promote::ClosureInstance;
use crate::ClosureError;

/// Field used for the per-move product check.
const CHECK_P: u64 = 13;
type Check = Fp<CHECK_P>;

/// Moves allowed before the run is declared non-terminating.
const MAX_MOVES: usize = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Role {
    /// The factor whose subscript is the cell's jump coordinate.
    Principal,
    /// The leftover factors at `c′` from expanding `W_{(i+1,i)}(γ_c)`.
    Auxiliary,
    Excited { cooling: Cell },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Factor {
    pub pair: (usize, usize),
    pub entry: Poly,
    pub role: Role,
}

impl Factor {
    fn new(pair: (usize, usize), entry: Poly, role: Role) -> Self {
        Factor { pair, entry, role }
    }

    pub fn is_excited(&self) -> bool {
        matches!(self.role, Role::Excited { .. })
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = format!("X({},{})({})", self.pair.0, self.pair.1, self.entry);
        if self.is_excited() {
            write!(f, "{{{body}}}")
        } else {
            write!(f, "{body}")
        }
    }
}

/// Factors arranged by cell, cells in product order (highest reading label first).
#[derive(Clone, Debug, PartialEq)]
pub struct FactorTable {
    n: usize,
    cells: Vec<Cell>,
    labels: Vec<usize>,
    factors: Vec<Vec<Factor>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorView {
    pub pair: (usize, usize),
    pub entry: String,
    pub excited: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellView {
    pub row: usize,
    pub col: usize,
    pub label: usize,
    pub factors: Vec<FactorView>,
}

impl FactorTable {
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn position(&self, c: Cell) -> usize {
        self.cells.iter().position(|&x| x == c).expect("cell of the shape")
    }

    pub fn factors_at(&self, c: Cell) -> &[Factor] {
        &self.factors[self.position(c)]
    }

    pub fn principal(&self, c: Cell) -> Option<&Factor> {
        self.factors_at(c).iter().find(|f| f.role == Role::Principal)
    }

    pub fn excited_count(&self) -> usize {
        self.factors.iter().flatten().filter(|f| f.is_excited()).count()
    }

    /// The product of all factors, left to right.
    pub fn product(&self) -> Result<Matrix<Poly>, ClosureError> {
        let mut m = Matrix::identity(self.n);
        for f in self.factors.iter().flatten() {
            if !f.entry.is_zero() {
                m = m.mul(&transvection(self.n, f.pair.0, f.pair.1, f.entry.clone())?);
            }
        }
        Ok(m)
    }

    fn eval_product(&self, vals: &HashMap<Var, Check>) -> Result<Matrix<Check>, ClosureError> {
        let mut m = Matrix::identity(self.n);
        for f in self.factors.iter().flatten() {
            let x = eval_check(&f.entry, vals)?;
            if !x.is_zero() {
                m = m.mul(&transvection(self.n, f.pair.0, f.pair.1, x)?);
            }
        }
        Ok(m)
    }

    pub fn view(&self) -> Vec<CellView> {
        self.cells
            .iter()
            .zip(&self.labels)
            .zip(&self.factors)
            .map(|((c, &label), fs)| CellView {
                row: c.row,
                col: c.col,
                label,
                factors: fs
                    .iter()
                    .map(|f| FactorView { pair: f.pair, entry: f.entry.to_string(), excited: f.is_excited() })
                    .collect(),
            })
            .collect()
    }

    /// One line per row of the shape, cells separated by ` | `; excited factors in braces.
    pub fn render(&self) -> String {
        let rows = self.cells.iter().map(|c| c.row).max().map_or(0, |r| r + 1);
        let mut out = String::new();
        for r in 0..rows {
            let mut cells: Vec<(usize, &Vec<Factor>)> = self
                .cells
                .iter()
                .zip(&self.factors)
                .filter(|(c, _)| c.row == r)
                .map(|(c, fs)| (c.col, fs))
                .collect();
            cells.sort_by_key(|x| x.0);
            let line: Vec<String> = cells
                .iter()
                .map(|(_, fs)| fs.iter().map(|f| f.to_string()).collect::<Vec<_>>().join("·"))
                .collect();
            out.push_str(&line.join(" | "));
            out.push('\n');
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Snapshot {
    pub caption: String,
    pub table: FactorTable,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Distortion {
    pub instance: ClosureInstance,
    pub reading: ReadingOrder,
    /// The product formula for `R̃_D` before conjugation, then one snapshot after
    /// the conjugation and one after each excited factor cools.
    pub snapshots: Vec<Snapshot>,
    /// Elementary moves performed, each followed by a product check.
    pub moves: usize,
    /// Excited factors created after the first one.
    pub created: usize,
    /// The recurrence bound for the position of `c`.
    pub bound: u128,
}

impl Distortion {
    pub fn final_table(&self) -> &FactorTable {
        &self.snapshots.last().expect("at least two snapshots").table
    }

    /// `γ_c` as a symbol.
    pub fn gamma_c(&self) -> Var {
        gamma_var(&self.instance.d, self.instance.c())
    }
}

pub fn gamma_var(d: &GoDiagram, c: Cell) -> Var {
    Var::new(Family::Gamma, cell_label(d, c))
}

/// `a_1 = 0`, `a_k = k + Σ_{j<k} a_j`.
pub fn excited_bound(k: usize) -> u128 {
    let mut a: Vec<u128> = vec![0];
    for k in 2..=k.max(1) {
        let s: u128 = a.iter().sum();
        a.push((k as u128).saturating_add(s));
    }
    a[k.max(1) - 1]
}

fn eval_check(p: &Poly, vals: &HashMap<Var, Check>) -> Result<Check, ClosureError> {
    Ok(p.eval(&|v| vals.get(&v).copied(), &|q| rational_mod(q, CHECK_P).map(|x| Check::new(x as i64)))?)
}

fn commute(a: (usize, usize), b: (usize, usize)) -> bool {
    a.1 != b.0 && b.1 != a.0
}

/// `W_{(a,b)}(−β) X_{(p,q)}(x) W_{(a,b)}(β)` for `{p,q} ≠ {a,b}`.
fn conjugate(a: usize, b: usize, beta: &Poly, pair: (usize, usize), x: &Poly) -> Result<((usize, usize), Poly), ClosureError> {
    let (p, q) = pair;
    if (p == a && q == b) || (p == b && q == a) {
        return Err(ClosureError::Unmovable((a, b), pair));
    }
    let binv = beta.inv().ok_or(ClosureError::Algebra(deodhar_core::algebra::AlgebraError::DivisionByZero))?;
    let swap = |t: usize| if t == a { b } else if t == b { a } else { t };
    let mut y = x.clone();
    if p == a {
        y = y.mul(&binv);
    } else if p == b {
        y = y.mul(&beta.neg());
    }
    if q == a {
        y = y.mul(beta);
    } else if q == b {
        y = y.mul(&binv.neg());
    }
    Ok(((swap(p), swap(q)), y))
}

struct Engine<'a> {
    d_prime: &'a GoDiagram,
    i: usize,
    c_prime: Cell,
    table: FactorTable,
    vals: HashMap<Var, Check>,
    reference: Matrix<Check>,
    moves: usize,
    created: usize,
}

impl Engine<'_> {
    fn check(&mut self, what: impl FnOnce() -> String) -> Result<(), ClosureError> {
        self.moves += 1;
        if self.moves > MAX_MOVES {
            return Err(ClosureError::NoTermination(MAX_MOVES));
        }
        if self.table.eval_product(&self.vals)? != self.reference {
            return Err(ClosureError::ProductMismatch { step: self.moves, what: what() });
        }
        Ok(())
    }

    fn excited_allowed(&self, pos: usize, pair: (usize, usize)) -> bool {
        let cell = self.table.cells[pos];
        if cell == self.c_prime {
            pair != (self.i + 1, self.i) && pair != (self.i, self.i + 1)
        } else {
            pair != self.d_prime.sigma(cell)
        }
    }

    /// First cell left of `pos` where the pipes of `pair` meet again in `D′`.
    fn cooling_site(&self, pos: usize, pair: (usize, usize)) -> Result<Cell, ClosureError> {
        let cell = self.table.cells[pos];
        for q in (0..pos).rev() {
            let x = self.table.cells[q];
            let s = self.d_prime.sigma(x);
            if s == pair || s == (pair.1, pair.0) {
                if s == pair && self.d_prime.stone(x) == Stone::Black {
                    return Ok(x);
                }
                break;
            }
        }
        Err(ClosureError::NoCoolingSite { cell, pair })
    }

    fn leftmost_excited(&self) -> Option<(usize, usize)> {
        self.table
            .factors
            .iter()
            .enumerate()
            .find_map(|(p, fs)| fs.iter().position(|f| f.is_excited()).map(|k| (p, k)))
    }

    /// Move the excited factor at `(pos, idx)` left until it merges at its cooling site.
    fn migrate(&mut self, mut pos: usize, mut idx: usize) -> Result<(), ClosureError> {
        let cooling = match self.table.factors[pos][idx].role {
            Role::Excited { cooling } => cooling,
            _ => unreachable!("migrate is called on excited factors"),
        };
        let cooling_pos = self.table.position(cooling);
        loop {
            if idx == 0 {
                if pos == cooling_pos || pos == 0 {
                    let e = &self.table.factors[pos][idx];
                    return Err(ClosureError::NoCoolingSite { cell: self.table.cells[pos], pair: e.pair });
                }
                let e = self.table.factors[pos].remove(0);
                pos -= 1;
                self.table.factors[pos].push(e);
                idx = self.table.factors[pos].len() - 1;
                continue;
            }
            let (f_pair, f_entry, f_role) = {
                let f = &self.table.factors[pos][idx - 1];
                (f.pair, f.entry.clone(), f.role)
            };
            let (e_pair, e_entry) = {
                let e = &self.table.factors[pos][idx];
                (e.pair, e.entry.clone())
            };
            if pos == cooling_pos && f_pair == e_pair {
                let merged = f_entry.add(&e_entry);
                self.table.factors[pos].remove(idx);
                if merged.is_zero() && f_role != Role::Principal {
                    self.table.factors[pos].remove(idx - 1);
                } else {
                    self.table.factors[pos][idx - 1].entry = merged;
                }
                let cell = self.table.cells[pos];
                return self.check(|| format!("merge X{e_pair:?} at {cell}"));
            }
            if f_entry.is_zero() || e_entry.is_zero() || commute(f_pair, e_pair) {
                self.table.factors[pos].swap(idx - 1, idx);
                idx -= 1;
                self.check(|| format!("commute X{e_pair:?} past X{f_pair:?}"))?;
                continue;
            }
            // F E = E F N with N = X_(f0,e1)(xy) when f1 = e0, X_(e0,f1)(-xy) when e1 = f0.
            let prod = f_entry.mul(&e_entry);
            let (n_pair, n_entry) = if f_pair.1 == e_pair.0 && e_pair.1 != f_pair.0 {
                ((f_pair.0, e_pair.1), prod)
            } else if e_pair.1 == f_pair.0 && f_pair.1 != e_pair.0 {
                ((e_pair.0, f_pair.1), prod.neg())
            } else {
                return Err(ClosureError::Unmovable(e_pair, f_pair));
            };
            if n_pair.0 < n_pair.1 {
                return Err(ClosureError::IncreasingExcited(n_pair));
            }
            let cell = self.table.cells[pos];
            if !self.excited_allowed(pos, n_pair) {
                return Err(ClosureError::UnexpectedFactor { cell, pair: n_pair });
            }
            let n_cooling = self.cooling_site(pos, n_pair)?;
            self.table.factors[pos].swap(idx - 1, idx);
            self.table.factors[pos].insert(idx + 1, Factor::new(n_pair, n_entry, Role::Excited { cooling: n_cooling }));
            self.created += 1;
            idx -= 1;
            self.check(|| format!("move X{e_pair:?} past X{f_pair:?} creating X{n_pair:?} at {cell}"))?;
        }
    }
}

/// The D′-distortion of `R̃_D` for a closure instance with `π(D′) = 1`.
///
/// Every elementary move is followed by a check that the product of the table,
/// evaluated at a random point over `F_13` (fixed by `seed`), is unchanged.
pub fn distort(inst: &ClosureInstance, reading: &ReadingOrder, seed: u64) -> Result<Distortion, ClosureError> {
    let (d, d_prime) = (&inst.d, &inst.d_prime);
    if !d_prime.trace().perm.is_identity() {
        return Err(ClosureError::NotIdentity);
    }
    let (c, c_prime, i) = (inst.c(), inst.c_prime(), inst.i());
    let n = d.shape().n();
    let cells = reading.cells_descending();
    let labels: Vec<usize> = cells.iter().map(|&x| reading.label(x)).collect();
    let gamma = |x: Cell| Laurent::var(gamma_var(d, x));
    let factors = cells
        .iter()
        .map(|&x| {
            let entry = if d.stone(x) == Stone::White { Poly::zero() } else { gamma(x) };
            vec![Factor::new(d.sigma(x), entry, Role::Principal)]
        })
        .collect();
    let mut table = FactorTable { n, cells: cells.clone(), labels, factors };

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vals: HashMap<Var, Check> = cells
        .iter()
        .map(|&x| (gamma_var(d, x), Check::new(rng.gen_range(1..CHECK_P) as i64)))
        .collect();
    let reference = table.eval_product(&vals)?;
    let mut snapshots = vec![Snapshot { caption: "product formula for D".into(), table: table.clone() }];

    let (pc, pcp) = (table.position(c), table.position(c_prime));
    let gc = gamma(c);
    let gc_inv = gc.inv().expect("γ_c is a monomial");
    for pos in pcp + 1..pc {
        let f = &table.factors[pos][0];
        let (pair, entry) = conjugate(i + 1, i, &gc, f.pair, &f.entry)?;
        table.factors[pos][0] = Factor::new(pair, entry, Role::Principal);
    }
    let at_cp = table.factors[pcp][0].entry.add(&gc);
    table.factors[pcp] = vec![
        Factor::new((i + 1, i), at_cp, Role::Principal),
        Factor::new((i, i + 1), gc_inv.neg(), Role::Auxiliary),
        Factor::new((i + 1, i), gc.clone(), Role::Auxiliary),
    ];
    table.factors[pc] = vec![
        Factor::new((i + 1, i), gc.neg(), Role::Excited { cooling: c_prime }),
        Factor::new((i, i + 1), gc_inv, Role::Principal),
    ];
    for (pos, &x) in cells.iter().enumerate() {
        if x == c_prime {
            continue;
        }
        let p = table.factors[pos].iter().find(|f| f.role == Role::Principal).expect("principal");
        if p.pair != d_prime.sigma(x) {
            return Err(ClosureError::UnexpectedFactor { cell: x, pair: p.pair });
        }
    }
    snapshots.push(Snapshot { caption: "conjugated".into(), table: table.clone() });

    let mut eng = Engine { d_prime, i, c_prime, table, vals, reference, moves: 0, created: 0 };
    eng.check(|| "conjugation".into())?;
    while let Some((pos, idx)) = eng.leftmost_excited() {
        let f = eng.table.factors[pos][idx].clone();
        let Role::Excited { cooling } = f.role else { unreachable!() };
        eng.migrate(pos, idx)?;
        snapshots.push(Snapshot {
            caption: format!("moved {} from {} to {}", Factor { role: Role::Principal, ..f }, cells[pos], cooling),
            table: eng.table.clone(),
        });
    }

    for (pos, &x) in cells.iter().enumerate() {
        let fs = &eng.table.factors[pos];
        let expect: Vec<(usize, usize)> = if x == c_prime {
            vec![(i + 1, i), (i, i + 1)]
        } else if x == c {
            vec![(i, i + 1)]
        } else {
            vec![d_prime.sigma(x)]
        };
        let got: Vec<(usize, usize)> = fs.iter().map(|f| f.pair).collect();
        if got != expect {
            let bad = got.iter().zip(&expect).find(|(a, b)| a != b).map_or(got[0], |(a, _)| *a);
            return Err(ClosureError::UnexpectedFactor { cell: x, pair: bad });
        }
    }
    Ok(Distortion {
        instance: inst.clone(),
        reading: reading.clone(),
        snapshots,
        moves: eng.moves,
        created: eng.created,
        bound: excited_bound(pc + 1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use deodhar_core::algebra::weyl_factor;

    fn x(i: u32) -> Poly {
        Laurent::sym(Family::X, i)
    }

    #[test]
    fn conjugation_matches_matrices() {
        let n = 4;
        let beta = x(1);
        let w = weyl_factor(n, 3, 1, beta.clone()).unwrap();
        let w_inv = weyl_factor(n, 3, 1, beta.neg()).unwrap();
        for p in 1..=n {
            for q in 1..=n {
                if p == q || (p == 3 && q == 1) || (p == 1 && q == 3) {
                    continue;
                }
                let lhs = w_inv.mul(&transvection(n, p, q, x(2)).unwrap()).mul(&w);
                let (pair, y) = conjugate(3, 1, &beta, (p, q), &x(2)).unwrap();
                assert_eq!(lhs, transvection(n, pair.0, pair.1, y).unwrap(), "({p},{q})");
            }
        }
    }

    #[test]
    fn bound_recurrence() {
        assert_eq!((1..=5).map(excited_bound).collect::<Vec<_>>(), vec![0, 2, 5, 11, 23]);
    }
}

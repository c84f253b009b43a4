//! Symbolic `γ_c → ∞` limits.

use num::{BigInt, BigRational, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use deodhar_core::algebra::{Family, Matrix, Poly, Ring, Var};
use deodhar_core::diagram::{Cell, GoDiagram, ReadingOrder, Stone};
use deodhar_networks::{product_formula_matrix, restricted_weight_matrix, ParamFamily, Params};

use crate::distort::{distort, gamma_var, Distortion};
use crate::pad::{pad_instance, PaddedInstance};
use crate::promote::ClosureInstance;
use crate::solve::{solve_gamma, GammaSolution};
use crate::ClosureError;

#[derive(Clone, Debug, PartialEq)]
pub struct ClosureReport {
    pub ok: bool,
    /// `R_D` with the solved parameters, as Laurent polynomials in `β` and `γ_c`.
    pub r_d: Matrix<Poly>,
    /// The `γ_c⁰` part of `R_D`.
    pub limit: Matrix<Poly>,
    pub r_d_prime: Matrix<Poly>,
    /// Highest power of `γ_c` in any entry of `R_D`.
    pub max_degree: i32,
    /// First entry (row, column, 0-based) with a positive power or a wrong limit.
    pub witness: Option<(usize, usize)>,
    /// The same check for the untruncated `R̃_D` against `R̃_{D′}`.
    pub full_ok: bool,
    pub distortion: Distortion,
    pub solution: GammaSolution,
}

/// `R̃_D` with every `γ_b` replaced by its solved expression.
fn substituted_matrix(d: &GoDiagram, sol: &GammaSolution, reading: &ReadingOrder) -> Result<Matrix<Poly>, ClosureError> {
    let params = Params::from_fn_unchecked(d, ParamFamily::Gamma, |x| {
        let v = gamma_var(d, x);
        match (d.stone(x), sol.subs.get(&v)) {
            (Stone::White, _) => Poly::zero(),
            (_, Some(p)) => p.clone(),
            (_, None) => Poly::var(v),
        }
    });
    Ok(product_formula_matrix(d, &params, reading)?)
}

fn limit_check(m: &Matrix<Poly>, target: &Matrix<Poly>, gc: Var) -> (Matrix<Poly>, i32, Option<(usize, usize)>) {
    let mut lim = Matrix::zeros(m.rows(), m.cols());
    let mut max_degree = i32::MIN;
    let mut witness = None;
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            let e = m.get(r, c);
            let hi = e.degree_range(gc).map_or(0, |x| x.1);
            max_degree = max_degree.max(hi);
            let l = e.coefficient_of(gc, 0);
            if witness.is_none() && (hi > 0 || &l != target.get(r, c)) {
                witness = Some((r, c));
            }
            lim.set(r, c, l);
        }
    }
    (lim, max_degree.max(0), witness)
}

/// Distort, solve, and take the limit of `R_D` as `γ_c → ∞` against a symbolic
/// point of `𝒟_{D′}`.
pub fn verify_closure_identity_case(
    d_prime: &GoDiagram,
    c: Cell,
    c_prime: Cell,
    reading: &ReadingOrder,
    seed: u64,
) -> Result<ClosureReport, ClosureError> {
    let inst = ClosureInstance::new(d_prime, c, c_prime)?;
    let distortion = distort(&inst, reading, seed)?;
    let solution = solve_gamma(&distortion)?;
    let gc = solution.gamma_c;
    let d = &inst.d;
    let full = substituted_matrix(d, &solution, reading)?;
    let beta = Params::<Poly>::symbolic(d_prime, ParamFamily::Beta);
    let (full_prime, r_d_prime) = restricted_weight_matrix(d_prime, &beta)?;
    let rows: Vec<usize> = d.west_labels().iter().map(|v| v - 1).collect();
    let r_d = full.select_rows(&rows);
    let (limit, max_degree, witness) = limit_check(&r_d, &r_d_prime, gc);
    let (_, _, full_witness) = limit_check(&full, &full_prime, gc);
    Ok(ClosureReport {
        ok: witness.is_none(),
        r_d,
        limit,
        r_d_prime,
        max_degree,
        witness,
        full_ok: full_witness.is_none(),
        distortion,
        solution,
    })
}

/// Debugging fallback: evaluate `R_D` over ℚ at `γ_c = 10^m`, `m = 1..=6`, with
/// seeded integer `β`, and return the largest entrywise distance to `R_{D′}` for
/// each `m`.
pub fn numeric_limit_check(report: &ClosureReport, seed: u64) -> Result<Vec<BigRational>, ClosureError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut betas = std::collections::BTreeMap::new();
    let gc = report.solution.gamma_c;
    let mut vars = std::collections::BTreeSet::new();
    for r in 0..report.r_d.rows() {
        for c in 0..report.r_d.cols() {
            vars.extend(report.r_d.get(r, c).vars());
            vars.extend(report.r_d_prime.get(r, c).vars());
        }
    }
    for v in vars {
        if v.family == Family::Beta {
            betas.insert(v, BigRational::from_integer(BigInt::from(rng.gen_range(1..10))));
        }
    }
    let lift = |q: &BigRational| Some(q.clone());
    let target = report.r_d_prime.try_map(|e| e.eval(&|v| betas.get(&v).cloned(), &lift))?;
    let mut out = Vec::new();
    for m in 1..=6u32 {
        let g = BigRational::from_integer(BigInt::from(10).pow(m));
        let val = |v: Var| if v == gc { Some(g.clone()) } else { betas.get(&v).cloned() };
        let at = report.r_d.try_map(|e| e.eval(&val, &lift))?;
        let mut worst = <BigRational as Zero>::zero();
        for r in 0..at.rows() {
            for c in 0..at.cols() {
                let diff = (at.get(r, c) - target.get(r, c)).abs();
                if diff > worst {
                    worst = diff;
                }
            }
        }
        out.push(worst);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub struct GeneralReport {
    pub ok: bool,
    pub padded: PaddedInstance,
    pub identity: ClosureReport,
}

impl GeneralReport {
    /// How the identity-case result descends to the original pair.
    pub fn justification(&self) -> String {
        if self.padded.steps.is_empty() {
            return "no padding needed: D' already has the identity permutation".into();
        }
        format!(
            "closure verified for the padded pair; removing the {} padding rows/columns ({}) descends it to the original diagrams",
            self.padded.steps.len(),
            self.padded.steps.iter().map(|s| s.name()).collect::<Vec<_>>().join(",")
        )
    }
}

/// Pad `D′` to the identity permutation, verify the padded pair, and check that
/// truncation recovers `D′` and `D`.
pub fn verify_closure_general(d_prime: &GoDiagram, c: Cell, c_prime: Cell, seed: u64) -> Result<GeneralReport, ClosureError> {
    let padded = pad_instance(d_prime, c, c_prime)?;
    let reading = ReadingOrder::row_major(padded.d_prime.shape());
    let identity = verify_closure_identity_case(&padded.d_prime, padded.c, padded.c_prime, &reading, seed)?;
    Ok(GeneralReport { ok: identity.ok && padded.consistent, padded, identity })
}

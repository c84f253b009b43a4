mod args;
mod render;

use std::fmt::{Display, Write as _};
use std::io::Read;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::Parser;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use deodhar_closure::{
    adjacent_pairs, conjecture_scan, fq_cell_census, verify_closure_general, verify_closure_identity_case, ClosureReport,
    ConjectureMode, Distortion, DEFAULT_CENSUS_GUARD, DEFAULT_CLOSURE_GUARD,
};
use deodhar_core::algebra::{subsets, Fp, Matrix, Poly, Ring};
use deodhar_core::diagram::io::{self, Parsed};
use deodhar_core::diagram::{
    enumerate_diagrams, Cell, DiagramClass, Filling, GoDiagram, Partition, ReadingKind, ReadingOrder,
    DEFAULT_ENUM_GUARD,
};
use deodhar_networks::{
    alpha_to_beta, alpha_to_tw, dual_point, dual_weight_matrix, random_params, restricted_weight_matrix,
    tw_weight_matrix, wtprime_weight_matrix, ParamFamily, Params,
};
use deodhar_toggle::{plucker, toggle_graph, Method, DEFAULT_TOGGLE_GUARD};

use args::{ClassArg, Cli, Command, Field, Format, Global, MatrixArg, MethodArg, ModeArg, PairArg, Reading, ShapeArgs};

/// Misuse of the command line that clap cannot see (exit status 2).
#[derive(Debug)]
struct UsageError(String);

impl Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

macro_rules! with_prime {
    ($p:expr, $f:ident ( $($a:expr),* )) => {
        match $p {
            2 => $f::<2>($($a),*),
            3 => $f::<3>($($a),*),
            5 => $f::<5>($($a),*),
            7 => $f::<7>($($a),*),
            11 => $f::<11>($($a),*),
            13 => $f::<13>($($a),*),
            17 => $f::<17>($($a),*),
            19 => $f::<19>($($a),*),
            p => unreachable!("prime {p} rejected by the parser"),
        }
    };
}

trait ToJson {
    fn to_json(&self) -> Value;
}

impl ToJson for Poly {
    fn to_json(&self) -> Value {
        json!({ "text": self.to_string(), "terms": Poly::to_json(self) })
    }
}

impl<const P: u64> ToJson for Fp<P> {
    fn to_json(&self) -> Value {
        json!(self.value())
    }
}

fn matrix_json<T: Ring + ToJson>(m: &Matrix<T>) -> Value {
    Value::Array((0..m.rows()).map(|r| Value::Array(m.row(r).iter().map(ToJson::to_json).collect())).collect())
}

struct Ctx<'a> {
    g: &'a Global,
}

impl Ctx<'_> {
    fn source(&self) -> Result<String> {
        if let Some(s) = &self.g.inline {
            return Ok(s.clone());
        }
        if let Some(p) = &self.g.input {
            return std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()));
        }
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    }

    fn parsed(&self) -> Result<Parsed> {
        Ok(io::parse_any(&self.source()?)?)
    }

    fn diagram(&self) -> Result<GoDiagram> {
        Ok(self.parsed()?.into_go()?)
    }

    fn reading(&self, d: &GoDiagram) -> ReadingOrder {
        match self.g.reading {
            Reading::Row => ReadingKind::RowMajor,
            Reading::Col => ReadingKind::ColumnMajor,
        }
        .build(d.shape())
    }

    fn guard(&self, default: usize) -> usize {
        self.g.guard.unwrap_or(default)
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.g.seed)
    }

    fn json(&self, v: Value) -> Result<String> {
        Ok(serde_json::to_string_pretty(&v)? + "\n")
    }
}

fn shapes(a: &ShapeArgs, fallback: Option<&Partition>) -> Result<Vec<Partition>> {
    match (&a.shape, a.k, a.n) {
        (Some(parts), Some(k), Some(n)) => Ok(vec![Partition::new(parts.clone(), k, n)?]),
        (Some(parts), None, None) => Ok(vec![Partition::minimal(parts.clone())?]),
        (None, Some(k), Some(n)) => {
            if k > n {
                bail!("k={k} exceeds n={n}");
            }
            Ok(Partition::all_in_box(k, n))
        }
        (None, None, None) => fallback.cloned().map(|p| vec![p]).ok_or_else(|| usage("give --shape or --k and --n")),
        _ => Err(usage("--k and --n go together")),
    }
}

fn enumerate(ctx: &Ctx, shape: &ShapeArgs, class: ClassArg) -> Result<String> {
    let class = match class {
        ClassArg::All => DiagramClass::All,
        ClassArg::Go => DiagramClass::Go,
        ClassArg::Le => DiagramClass::Le,
    };
    let guard = ctx.guard(DEFAULT_ENUM_GUARD);
    let mut all: Vec<Filling> = Vec::new();
    for s in shapes(shape, None)? {
        all.extend(enumerate_diagrams(&s, class, guard)?);
    }
    if ctx.g.format == Format::Json {
        let v: Vec<Value> = all.iter().map(|f| serde_json::to_value(filling_json(f))).collect::<Result<_, _>>()?;
        return ctx.json(Value::Array(v));
    }
    let mut out = String::new();
    for f in &all {
        let rows = compact_rows(f);
        writeln!(out, "k={} n={} {}", f.shape().k(), f.shape().n(), rows)?;
    }
    writeln!(out, "{} diagrams", all.len())?;
    Ok(out)
}

fn filling_json(f: &Filling) -> io::DiagramJson {
    match GoDiagram::from_filling(f) {
        Ok(d) => io::to_json(&d),
        Err(_) => io::filling_to_json(f),
    }
}

/// Stone rows joined by '/', tile rows for non-Go fillings; "-" for the empty shape.
fn compact_rows(f: &Filling) -> String {
    let rows: Vec<String> = io::to_text(f).lines().skip(1).map(str::to_string).collect();
    if rows.is_empty() {
        "-".into()
    } else {
        rows.join("/")
    }
}

fn classify_cmd(ctx: &Ctx) -> Result<String> {
    let f = ctx.parsed()?.filling().clone();
    let c = deodhar_core::diagram::classify(&f);
    let (class, witness) = match &c {
        deodhar_core::diagram::Classification::NotGo { witness } => ("not Go", Some(*witness)),
        deodhar_core::diagram::Classification::Le(_) => ("Le", None),
        deodhar_core::diagram::Classification::Go(_) => ("Go", None),
    };
    let stones = c.diagram().map(|d| d.stone_rows());
    if ctx.g.format == Format::Json {
        return ctx.json(json!({
            "class": class,
            "forbidden_at": witness.map(|w| [w.row, w.col]),
            "stones": stones,
        }));
    }
    Ok(match (stones, witness) {
        (Some(rows), _) => format!("{class}\n{}\n", rows.join(" / ")),
        (None, Some(w)) => format!("{class}: configuration B at {w}\n"),
        (None, None) => unreachable!(),
    })
}

fn trace_cmd(ctx: &Ctx) -> Result<String> {
    let f = ctx.parsed()?.filling().clone();
    let t = f.trace();
    if ctx.g.format == Format::Json {
        return ctx.json(serde_json::to_value(&t)?);
    }
    let reading = ReadingOrder::row_major(f.shape());
    let mut out = String::new();
    let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
    writeln!(out, "permutation: {}", t.perm)?;
    writeln!(out, "length: {}", t.perm.length())?;
    writeln!(out, "north-west labels: {}", join(&t.nw_labels))?;
    writeln!(out, "west labels: {}", join(&t.west_labels))?;
    writeln!(out, "north labels: {}", join(&t.north_labels))?;
    writeln!(out, "cell   label config exits(w,n)")?;
    for c in f.shape().cells() {
        let (w, n) = t.exits(c);
        writeln!(out, "{:<6} {:>5} {:?}      ({w},{n})", c.to_string(), reading.label(c), t.config_at(c))?;
    }
    for (p, route) in t.routes.iter().enumerate() {
        let cells: Vec<String> = route.iter().map(|s| s.cell.to_string()).collect();
        writeln!(out, "pipe {}: {}", p + 1, cells.join(" "))?;
    }
    Ok(out)
}

fn render_matrices<T: Ring + Display + ToJson>(ctx: &Ctx, mats: &[(&str, Matrix<T>)], header: Option<String>) -> Result<String> {
    if ctx.g.format == Format::Json {
        let mut obj = serde_json::Map::new();
        if let Some(h) = &header {
            obj.insert("assignment".into(), json!(h));
        }
        for (name, m) in mats {
            obj.insert((*name).into(), matrix_json(m));
        }
        return ctx.json(Value::Object(obj));
    }
    let mut out = header.map(|h| h + "\n").unwrap_or_default();
    for (name, m) in mats {
        writeln!(out, "{name}:\n{m}")?;
    }
    Ok(out)
}

fn wanted(which: MatrixArg, m: MatrixArg) -> bool {
    which == MatrixArg::All || which == m
}

fn weights_symbolic(ctx: &Ctx, d: &GoDiagram, which: MatrixArg) -> Result<String> {
    let mut mats: Vec<(&str, Matrix<Poly>)> = Vec::new();
    if wanted(which, MatrixArg::W) {
        mats.push(("W_D", tw_weight_matrix(d, &Params::<Poly>::symbolic(d, ParamFamily::Tw))?));
    }
    let (rt, r) = restricted_weight_matrix(d, &Params::<Poly>::symbolic(d, ParamFamily::Beta))?;
    if wanted(which, MatrixArg::Rt) {
        mats.push(("R~_D", rt));
    }
    if wanted(which, MatrixArg::R) {
        mats.push(("R_D", r));
    }
    if wanted(which, MatrixArg::S) {
        mats.push(("S_D", wtprime_weight_matrix(d, &Params::<Poly>::symbolic(d, ParamFamily::Alpha))?.1));
    }
    if wanted(which, MatrixArg::Rstar) {
        mats.push(("R*_D", dual_weight_matrix(d, &Params::<Poly>::symbolic(d, ParamFamily::BetaStar))?.1));
    }
    render_matrices(ctx, &mats, None)
}

fn assignment<const P: u64>(d: &GoDiagram, name: &str, p: &Params<Fp<P>>) -> String {
    let reading = ReadingOrder::row_major(d.shape());
    let vals: Vec<String> = reading
        .cells_descending()
        .into_iter()
        .map(|c| format!("{name}{}={}", reading.label(c), p.get(c)))
        .collect();
    format!("over F_{P}: {}", vals.join(" "))
}

/// One seeded α-point, carried to β and Talaska–Williams weights so every matrix
/// describes the same point.
fn weights_numeric<const P: u64>(ctx: &Ctx, d: &GoDiagram, which: MatrixArg) -> Result<String> {
    let alpha = random_params::<P>(d, ParamFamily::Alpha, &mut ctx.rng());
    let beta = alpha_to_beta(d, &alpha)?;
    let mut mats: Vec<(&str, Matrix<Fp<P>>)> = Vec::new();
    if wanted(which, MatrixArg::W) {
        mats.push(("W_D", tw_weight_matrix(d, &alpha_to_tw(d, &alpha)?)?));
    }
    let (rt, r) = restricted_weight_matrix(d, &beta)?;
    if wanted(which, MatrixArg::Rt) {
        mats.push(("R~_D", rt));
    }
    if wanted(which, MatrixArg::R) {
        mats.push(("R_D", r));
    }
    if wanted(which, MatrixArg::S) {
        mats.push(("S_D", wtprime_weight_matrix(d, &alpha)?.1));
    }
    if wanted(which, MatrixArg::Rstar) {
        mats.push(("R*_D (b* = -b)", dual_point(d, &beta)?.1));
    }
    render_matrices(ctx, &mats, Some(assignment(d, "a", &alpha)))
}

fn methods(m: MethodArg) -> Vec<Method> {
    match m {
        MethodArg::Minor => vec![Method::Minor],
        MethodArg::Lgv => vec![Method::Lgv],
        MethodArg::Toggle => vec![Method::Toggle],
        MethodArg::All => vec![Method::Minor, Method::Lgv, Method::Toggle],
    }
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Minor => "minor",
        Method::Lgv => "lgv",
        Method::Toggle => "toggle",
    }
}

fn plucker_with<T: Ring + Display + ToJson>(
    ctx: &Ctx,
    d: &GoDiagram,
    beta: &Params<T>,
    index: Option<&[usize]>,
    method: MethodArg,
) -> Result<String> {
    let guard = ctx.guard(DEFAULT_TOGGLE_GUARD);
    let n = d.shape().n();
    let k = d.shape().k();
    let sets: Vec<Vec<usize>> = match index {
        Some(i) => {
            let mut i = i.to_vec();
            i.sort();
            if i.len() != k || i.iter().any(|&x| x == 0 || x > n) || i.windows(2).any(|w| w[0] == w[1]) {
                bail!("index set {i:?} is not a {k}-subset of 1..{n}");
            }
            vec![i]
        }
        None => subsets(n, k),
    };
    let ms = methods(method);
    let mut rows: Vec<(Vec<usize>, Vec<(Method, T)>)> = Vec::new();
    for s in &sets {
        let vals: Vec<(Method, T)> =
            ms.iter().map(|&m| Ok((m, plucker(d, beta, s, m, guard)?))).collect::<Result<_>>()?;
        if index.is_some() || vals.iter().any(|(_, v)| !v.is_zero()) {
            rows.push((s.clone(), vals));
        }
    }
    if ctx.g.format == Format::Json {
        let v: Vec<Value> = rows
            .iter()
            .map(|(s, vals)| {
                let mut o = serde_json::Map::new();
                o.insert("I".into(), json!(s));
                for (m, x) in vals {
                    o.insert(method_name(*m).into(), x.to_json());
                }
                Value::Object(o)
            })
            .collect();
        return ctx.json(Value::Array(v));
    }
    let mut out = String::new();
    for (s, vals) in &rows {
        let label = s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        for (m, v) in vals {
            match (index.is_some(), ms.len()) {
                (true, 1) => writeln!(out, "{v}")?,
                (true, _) => writeln!(out, "{}: {v}", method_name(*m))?,
                (false, 1) => writeln!(out, "D{{{label}}} = {v}")?,
                (false, _) => writeln!(out, "D{{{label}}} {} = {v}", method_name(*m))?,
            }
        }
    }
    Ok(out)
}

fn plucker_numeric<const P: u64>(ctx: &Ctx, d: &GoDiagram, index: Option<&[usize]>, method: MethodArg) -> Result<String> {
    let beta = random_params::<P>(d, ParamFamily::Beta, &mut ctx.rng());
    let body = plucker_with(ctx, d, &beta, index, method)?;
    if ctx.g.format == Format::Json {
        return Ok(body);
    }
    Ok(format!("{}\n{body}", assignment(d, "b", &beta)))
}

fn toggles_cmd(ctx: &Ctx, d: &GoDiagram) -> Result<String> {
    let g = toggle_graph(d, ctx.guard(DEFAULT_TOGGLE_GUARD))?;
    let beta = Params::<Poly>::symbolic(d, ParamFamily::Beta);
    let tile_rows = |f: &Filling| -> Vec<String> {
        f.tiles().iter().map(|r| r.iter().map(|t| t.symbol()).collect()).collect()
    };
    if ctx.g.format == Format::Json {
        let vertices: Vec<Value> = g
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| {
                json!({
                    "id": i,
                    "tiles": tile_rows(v.filling()),
                    "toggled": v.toggled().iter().map(|c| [c.row, c.col]).collect::<Vec<_>>(),
                    "index_set": v.index_set(),
                    "sign": v.sign(),
                    "weight": v.weight(&beta).to_string(),
                })
            })
            .collect();
        let edges: Vec<Value> =
            g.edges.iter().map(|e| json!({ "from": e.from, "to": e.to, "cell": [e.cell.row, e.cell.col] })).collect();
        return ctx.json(json!({ "vertices": vertices, "edges": edges }));
    }
    let mut out = String::new();
    writeln!(out, "{} vertices, {} edges", g.vertices.len(), g.edges.len())?;
    for (i, v) in g.vertices.iter().enumerate() {
        let toggled: Vec<String> = v.toggled().iter().map(|c| c.to_string()).collect();
        let set: Vec<String> = v.index_set().iter().map(|x| x.to_string()).collect();
        writeln!(
            out,
            "v{i}: {} I={} sign={} weight={} toggled=[{}]",
            tile_rows(v.filling()).join("/"),
            set.join(","),
            if v.sign() < 0 { "-" } else { "+" },
            v.weight(&beta),
            toggled.join(" ")
        )?;
    }
    for e in &g.edges {
        writeln!(out, "v{} -> v{} at {}", e.from, e.to, e.cell)?;
    }
    Ok(out)
}

fn dual_cmd(ctx: &Ctx, d: &GoDiagram) -> Result<String> {
    let beta = Params::<Poly>::symbolic(d, ParamFamily::Beta);
    let (rt, r) = restricted_weight_matrix(d, &beta)?;
    let (rts, rs) = dual_weight_matrix(d, &Params::<Poly>::symbolic(d, ParamFamily::BetaStar))?;
    let (pt, p) = dual_point(d, &beta)?;
    let n = d.shape().n();
    let full_ok = rt.mul(&pt.transpose()) == Matrix::identity(n);
    let trunc_ok = r.mul(&p.transpose()).is_zero();
    let verdict = |b: bool| if b { "OK" } else { "FAIL" };
    if ctx.g.format == Format::Json {
        return ctx.json(json!({
            "R~*_D": matrix_json(&rts),
            "R*_D": matrix_json(&rs),
            "full_identity": full_ok,
            "truncated_orthogonal": trunc_ok,
        }));
    }
    let mut out = String::new();
    writeln!(out, "R~*_D:\n{rts}")?;
    writeln!(out, "R*_D:\n{rs}")?;
    writeln!(out, "R~_D (R~*_D at b*=-b)^T = I: {}", verdict(full_ok))?;
    writeln!(out, "R_D (R*_D at b*=-b)^T = 0: {}", verdict(trunc_ok))?;
    if !(full_ok && trunc_ok) {
        bail!("{out}duality check failed");
    }
    Ok(out)
}

fn to_cell(d: &GoDiagram, (r, c): (usize, usize)) -> Result<Cell> {
    let cell = Cell::new(r, c);
    if !d.shape().contains(cell) {
        bail!("cell {cell} is outside the shape");
    }
    Ok(cell)
}

struct ClosureRun {
    mode: &'static str,
    padding: Option<(Vec<String>, String, GoDiagram)>,
    report: ClosureReport,
    ok: bool,
}

fn run_closure(ctx: &Ctx, d: &GoDiagram, c: Cell, cp: Cell, general: bool, identity: bool) -> Result<ClosureRun> {
    let is_id = d.trace().perm.is_identity();
    if identity && !is_id {
        bail!("--identity needs the identity permutation; D' has {}", d.trace().perm);
    }
    if general || !is_id {
        let g = verify_closure_general(d, c, cp, ctx.g.seed)?;
        let steps = g.padded.steps.iter().map(|s| s.name().to_string()).collect();
        let just = g.justification();
        Ok(ClosureRun {
            mode: "general",
            padding: Some((steps, just, g.padded.d_prime.clone())),
            ok: g.ok,
            report: g.identity,
        })
    } else {
        let report = verify_closure_identity_case(d, c, cp, &ctx.reading(d), ctx.g.seed)?;
        Ok(ClosureRun { mode: "identity", padding: None, ok: report.ok, report })
    }
}

fn trace_text(dist: &Distortion) -> String {
    let mut out = String::new();
    for s in &dist.snapshots {
        let _ = writeln!(out, "== {}\n{}", s.caption, s.table.render());
    }
    out
}

fn closure_json(run: &ClosureRun, with_trace: bool) -> Value {
    let r = &run.report;
    let inst = &r.distortion.instance;
    let mut v = json!({
        "ok": run.ok,
        "mode": run.mode,
        "d_prime": inst.d_prime.stone_rows(),
        "d": inst.d.stone_rows(),
        "c": [inst.c().row, inst.c().col],
        "c_prime": [inst.c_prime().row, inst.c_prime().col],
        "pipes": [inst.i(), inst.i() + 1],
        "gamma_c": r.solution.gamma_c.to_string(),
        "max_degree": r.max_degree,
        "excited_created": r.distortion.created,
        "excited_bound": r.distortion.bound.to_string(),
        "witness": r.witness.map(|(a, b)| [a, b]),
        "equations": r.solution.equations.iter().map(|e| json!({
            "cell": [e.cell.row, e.cell.col],
            "lhs": e.lhs.to_string(),
            "rhs": e.rhs.to_string(),
        })).collect::<Vec<_>>(),
        "limit": matrix_json(&r.limit),
        "r_d_prime": matrix_json(&r.r_d_prime),
    });
    if let Some((steps, just, _)) = &run.padding {
        v["padding"] = json!({ "steps": steps, "justification": just });
    }
    if with_trace {
        v["snapshots"] = r
            .distortion
            .snapshots
            .iter()
            .map(|s| json!({ "caption": s.caption, "cells": serde_json::to_value(s.table.view()).unwrap_or(Value::Null) }))
            .collect();
    }
    v
}

fn closure_text(run: &ClosureRun, with_trace: bool) -> Result<String> {
    let r = &run.report;
    let inst = &r.distortion.instance;
    let mut out = String::new();
    if let Some((steps, _, _)) = &run.padding {
        writeln!(out, "padding: {}", if steps.is_empty() { "none".into() } else { steps.join(",") })?;
    }
    writeln!(out, "D' = {}", inst.d_prime.stone_rows().join("/"))?;
    writeln!(out, "D  = {}", inst.d.stone_rows().join("/"))?;
    writeln!(out, "pair c={} c'={} pipes {},{}", inst.c(), inst.c_prime(), inst.i(), inst.i() + 1)?;
    writeln!(out, "mode: {}", run.mode)?;
    writeln!(out, "excited factors created: {} (bound {})", r.distortion.created, r.distortion.bound)?;
    if with_trace {
        out.push('\n');
        out.push_str(&trace_text(&r.distortion));
        writeln!(out, "equations:")?;
        for e in &r.solution.equations {
            writeln!(out, "  {} {} = {}", e.cell, e.lhs, e.rhs)?;
        }
        out.push('\n');
    }
    writeln!(out, "max degree in {}: {}", r.solution.gamma_c, r.max_degree)?;
    if let Some((_, just, _)) = &run.padding {
        writeln!(out, "{just}")?;
    }
    match r.witness {
        None if run.ok => writeln!(out, "closure: OK")?,
        None => writeln!(out, "closure: FAIL (padding inconsistent)")?,
        Some((a, b)) => writeln!(out, "closure: FAIL at entry ({},{})", a + 1, b + 1)?,
    }
    Ok(out)
}

fn closure_cmd(ctx: &Ctx, pair: Option<PairArg>, general: bool, identity: bool, with_trace: bool) -> Result<String> {
    let d = ctx.diagram()?;
    if d.shape().size() > ctx.guard(DEFAULT_CLOSURE_GUARD.max(20)) {
        bail!("{} cells exceeds the guard", d.shape().size());
    }
    let pairs: Vec<(Cell, Cell)> = match pair {
        Some(p) => vec![(to_cell(&d, p.c)?, to_cell(&d, p.c_prime)?)],
        None => adjacent_pairs(&d).into_iter().map(|p| (p.c, p.c_prime)).collect(),
    };
    if pair.is_none() && pairs.is_empty() {
        return Ok("no adjacent crossing-uncrossing pairs\n".into());
    }
    let mut runs = Vec::new();
    for (c, cp) in pairs {
        runs.push(run_closure(ctx, &d, c, cp, general, identity)?);
    }
    let all_ok = runs.iter().all(|r| r.ok);
    let out = if ctx.g.format == Format::Json {
        let v: Vec<Value> = runs.iter().map(|r| closure_json(r, with_trace)).collect();
        ctx.json(if pair.is_some() { v.into_iter().next().unwrap_or(Value::Null) } else { Value::Array(v) })?
    } else if pair.is_some() {
        closure_text(&runs[0], with_trace)?
    } else {
        let mut out = String::new();
        for r in &runs {
            let inst = &r.report.distortion.instance;
            writeln!(
                out,
                "c={} c'={} pipes {},{} {}: {}",
                inst.c(),
                inst.c_prime(),
                inst.i(),
                inst.i() + 1,
                r.mode,
                if r.ok { "OK" } else { "FAIL" }
            )?;
            if with_trace {
                out.push_str(&trace_text(&r.report.distortion));
            }
        }
        out
    };
    if !all_ok {
        bail!("{out}closure check failed");
    }
    Ok(out)
}

fn census_cmd(ctx: &Ctx, n: usize, k: usize) -> Result<String> {
    let r = fq_cell_census(n, k, ctx.guard(DEFAULT_CENSUS_GUARD))?;
    if ctx.g.format == Format::Json {
        return ctx.json(json!({
            "n": n, "k": k, "diagrams": r.diagrams,
            "sum": r.sum.to_string(), "expected": r.expected.to_string(), "ok": r.ok(),
        }));
    }
    if r.ok() {
        Ok(format!("{}  OK\n", r.sum))
    } else {
        bail!("{}  MISMATCH (expected {})", r.sum, r.expected)
    }
}

fn render_cmd(ctx: &Ctx) -> Result<String> {
    let f = ctx.parsed()?.filling().clone();
    Ok(match ctx.g.format {
        Format::Text => render::ascii(&f),
        Format::Svg => render::svg(&f),
        Format::Json => ctx.json(serde_json::to_value(filling_json(&f))?)?,
    })
}

fn scan_cmd(ctx: &Ctx, shape: &ShapeArgs, mode: ModeArg) -> Result<String> {
    if !ctx.g.exploratory {
        return Err(usage("scan is heuristic; pass --exploratory to run it"));
    }
    let fallback = if ctx.g.input.is_some() || ctx.g.inline.is_some() {
        Some(ctx.parsed()?.filling().shape().clone())
    } else {
        None
    };
    let mode = match mode {
        ModeArg::Conj1 => ConjectureMode::Conj1,
        ModeArg::Conj2 => ConjectureMode::Conj2,
    };
    let guard = ctx.guard(12);
    let mut reports = Vec::new();
    for s in shapes(shape, fallback.as_ref())? {
        reports.push(conjecture_scan(&s, mode, guard)?);
    }
    if ctx.g.format == Format::Json {
        return ctx.json(serde_json::to_value(&reports)?);
    }
    let mut out = String::new();
    for r in &reports {
        writeln!(out, "{}", r.disclaimer)?;
        writeln!(out, "shape {:?} mode {:?}: {} instances", r.shape, r.mode, r.entries.len())?;
        for e in &r.entries {
            writeln!(
                out,
                "  D'={} D={} c={} c'={} pipes {},{} k={} {:?}{}",
                e.d_prime.join("/"),
                e.d.join("/"),
                e.c,
                e.c_prime,
                e.i,
                e.j,
                e.witness_k.map_or("-".into(), |k| k.to_string()),
                e.verdict,
                e.failing_index.as_ref().map_or(String::new(), |i| format!(" (coordinate {i:?} vanishes on D only)")),
            )?;
        }
        writeln!(out, "  adjacent pairs: {} checked, {} failed", r.adjacent_checked, r.adjacent_failed)?;
    }
    Ok(out)
}

fn run(cli: &Cli) -> Result<String> {
    let ctx = Ctx { g: &cli.global };
    if ctx.g.format == Format::Svg && !matches!(cli.command, Command::Render) {
        return Err(usage("--format svg is only available for render"));
    }
    match &cli.command {
        Command::Enumerate { shape, class } => enumerate(&ctx, shape, *class),
        Command::Classify => classify_cmd(&ctx),
        Command::Trace => trace_cmd(&ctx),
        Command::Weights { matrix } => {
            let d = ctx.diagram()?;
            match ctx.g.field {
                Field::Rat => weights_symbolic(&ctx, &d, *matrix),
                Field::Prime(p) => with_prime!(p, weights_numeric(&ctx, &d, *matrix)),
            }
        }
        Command::Plucker { index, method } => {
            let d = ctx.diagram()?;
            let index = index.as_deref();
            match ctx.g.field {
                Field::Rat => plucker_with(&ctx, &d, &Params::<Poly>::symbolic(&d, ParamFamily::Beta), index, *method),
                Field::Prime(p) => with_prime!(p, plucker_numeric(&ctx, &d, index, *method)),
            }
        }
        Command::Toggles => toggles_cmd(&ctx, &ctx.diagram()?),
        Command::Dual => dual_cmd(&ctx, &ctx.diagram()?),
        Command::ClosureCheck { pair, general, identity, trace } => closure_cmd(&ctx, *pair, *general, *identity, *trace),
        Command::Census { n, k } => census_cmd(&ctx, *n, *k),
        Command::Render => render_cmd(&ctx),
        Command::Scan { shape, mode } => scan_cmd(&ctx, shape, *mode),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => match &cli.global.out {
            Some(p) => match std::fs::write(p, out) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: writing {}: {e}", p.display());
                    ExitCode::from(1)
                }
            },
            None => {
                print!("{out}");
                ExitCode::SUCCESS
            }
        },
        Err(e) if e.is::<UsageError>() => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

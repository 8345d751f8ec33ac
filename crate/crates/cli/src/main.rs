//! `circinv`: verify circulant-determinant identities from the command line.

mod report;

use std::io::Read;
use std::process::ExitCode;
use std::time::Instant;

use circinv_core::circulant::{self, BlockSpec, Limits};
use circinv_core::ideal::{self, GenRing, KernelResult};
use circinv_core::invariant;
use circinv_core::lattice::{self, OracleResult};
use circinv_core::multipoly::ensure_y;
use circinv_core::parse::{format_monomial, parse_poly_auto};
use circinv_core::verify;
use circinv_core::{Basis, Error, ExpVec, Poly, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use report::{Report, Verdict};

#[derive(Parser)]
#[command(name = "circinv", version, about = "Exact checks of circulant-determinant invariant identities")]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,

    /// Raise or lower both expansion guards (x-space and y-space) to this order.
    #[arg(long, global = true, env = "CIRCINV_MAX_N")]
    max_n: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    X,
    Y,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Basis {
        match b {
            BasisArg::X => Basis::X,
            BasisArg::Y => Basis::Y,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check that the order-n circulant determinant is the product of its order-p blocks.
    Factor {
        n: usize,
        p: usize,
        /// Print each block determinant.
        #[arg(long)]
        emit_blocks: bool,
        /// Basis in which both sides are expanded.
        #[arg(long, value_enum, default_value = "x")]
        basis: BasisArg,
    },
    /// Test a polynomial for invariance under D and Δ.
    Invariant {
        n: usize,
        /// Polynomial in x0.. or y0..; `-` reads it from stdin.
        #[arg(required_unless_present = "gap_witness")]
        expr: Option<String>,
        /// Rewrite the invariant in terms of block determinants.
        #[arg(long)]
        express: bool,
        /// Also test whether the polynomial is a polynomial in the full determinant.
        #[arg(long)]
        sl: bool,
        /// Ignore EXPR and report an invariant monomial outside the block-determinant subring.
        #[arg(long, conflicts_with_all = ["expr", "express", "sl"])]
        gap_witness: bool,
    },
    /// Decide whether F(z, w) maps to zero under z ↦ y^(p), w ↦ y^(q).
    Kernel {
        n: usize,
        p: usize,
        q: usize,
        /// Polynomial in z0.. and w0..; `-` reads it from stdin.
        expr: String,
        /// Print cofactors writing F in terms of the binomial relations.
        #[arg(long)]
        certificate: bool,
    },
    /// Write an exponent vector as a nonnegative combination of block generators.
    Decompose {
        n: usize,
        /// Comma-separated entries, e.g. `1,1,1,1`.
        alpha: String,
    },
    /// Show the exponent vector that has no nonnegative block decomposition.
    Counterexample { n: usize },
    /// Run every identity check for orders up to N_MAX.
    VerifyAll {
        n_max: usize,
        /// Seed for the randomized checks.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = match cli.max_n {
        Some(m) => Limits::uniform(m),
        None => Limits::default(),
    };
    let start = Instant::now();
    let (name, params, outcome) = run(&cli.command, &limits);
    let mut report = match outcome {
        Ok(r) => r,
        Err(e) => {
            let r = Report::error(name, params, &e);
            if !cli.json {
                eprintln!("error: {e}");
                return exit_for_error(&e);
            }
            println!("{}", r.render_json());
            return exit_for_error(&e);
        }
    };
    report.timings_ms.insert("total".into(), start.elapsed().as_secs_f64() * 1e3);
    if cli.json {
        println!("{}", report.render_json());
    } else {
        print!("{}", report.render_text());
    }
    match report.verdict {
        Verdict::Pass => ExitCode::SUCCESS,
        Verdict::Fail => ExitCode::from(1),
        Verdict::Error => ExitCode::from(2),
    }
}

fn exit_for_error(e: &Error) -> ExitCode {
    match e {
        Error::ExpansionTooLarge { .. } => ExitCode::from(3),
        _ => ExitCode::from(2),
    }
}

fn run(cmd: &Command, limits: &Limits) -> (&'static str, Value, Result<Report>) {
    match cmd {
        Command::Factor { n, p, emit_blocks, basis } => {
            let params = json!({ "n": n, "p": p, "basis": Basis::from(*basis).name() });
            let r = cmd_factor(*n, *p, (*basis).into(), *emit_blocks, limits, params.clone());
            ("factor", params, r)
        }
        Command::Invariant { n, expr, express, sl, gap_witness } => {
            let params = json!({ "n": n, "expr": expr, "express": express, "sl": sl, "gap_witness": gap_witness });
            let r = if *gap_witness {
                cmd_gap_witness(*n, params.clone())
            } else {
                read_expr(expr.as_deref().unwrap_or_default())
                    .and_then(|text| cmd_invariant(*n, &text, *express, *sl, limits, params.clone()))
            };
            ("invariant", params, r)
        }
        Command::Kernel { n, p, q, expr, certificate } => {
            let params = json!({ "n": n, "p": p, "q": q, "expr": expr, "certificate": certificate });
            let r = read_expr(expr).and_then(|text| cmd_kernel(*n, *p, *q, &text, *certificate, params.clone()));
            ("kernel", params, r)
        }
        Command::Decompose { n, alpha } => {
            let params = json!({ "n": n, "alpha": alpha });
            ("decompose", params.clone(), cmd_decompose(*n, alpha, params))
        }
        Command::Counterexample { n } => {
            let params = json!({ "n": n });
            ("counterexample", params.clone(), cmd_counterexample(*n, params))
        }
        Command::VerifyAll { n_max, seed } => {
            let params = json!({ "n_max": n_max, "seed": seed });
            ("verify-all", params.clone(), cmd_verify_all(*n_max, *seed, limits, params))
        }
    }
}

fn read_expr(arg: &str) -> Result<String> {
    if arg != "-" {
        return Ok(arg.to_string());
    }
    let mut s = String::new();
    std::io::stdin()
        .read_to_string(&mut s)
        .map_err(|e| Error::Syntax { pos: 0, msg: format!("cannot read stdin: {e}") })?;
    Ok(s.trim().to_string())
}

fn y_monomial(e: &ExpVec) -> String {
    format_monomial(e, &|i| format!("y{i}"))
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidOrder(0));
    }
    Ok(())
}

fn cmd_factor(n: usize, p: usize, basis: Basis, emit: bool, limits: &Limits, params: Value) -> Result<Report> {
    check_n(n)?;
    let mut r = Report::new("factor", params);
    let t = Instant::now();
    let rep = circulant::verify_factorization(n, p, basis, limits)?;
    r.timings_ms.insert("factorization".into(), t.elapsed().as_secs_f64() * 1e3);
    r.line(format!("n: {n}"));
    r.line(format!("p: {p}"));
    r.line(format!("basis: {}", basis.name()));
    r.line(format!("blocks: {}", rep.blocks));
    r.line(format!("lhs terms: {}", rep.lhs_terms));
    r.line(format!("rhs terms: {}", rep.rhs_terms));
    r.detail("blocks", json!(rep.blocks));
    r.detail("lhs_terms", json!(rep.lhs_terms));
    r.detail("rhs_terms", json!(rep.rhs_terms));
    if let Some((e, lhs, rhs)) = &rep.first_mismatch {
        r.verdict = Verdict::Fail;
        r.line(format!("first mismatch: exponent {e}, lhs {lhs}, rhs {rhs}"));
        r.detail(
            "first_mismatch",
            json!({ "exponents": report::exponents(e), "lhs": report::element(lhs), "rhs": report::element(rhs) }),
        );
    }
    if emit {
        let mut blocks = Vec::new();
        for spec in BlockSpec::all(n, p)? {
            let b = match basis {
                Basis::X => circulant::theta_block(&spec, limits)?,
                Basis::Y => circulant::theta_block_y(&spec, limits)?,
            };
            r.line(format!("block T({},{}) = {b}", spec.p, spec.i));
            blocks.push(json!({ "p": spec.p, "i": spec.i, "poly": report::poly(&b) }));
        }
        r.detail("block_expansions", Value::Array(blocks));
    }
    Ok(r)
}

fn cmd_invariant(n: usize, text: &str, express: bool, sl: bool, limits: &Limits, params: Value) -> Result<Report> {
    check_n(n)?;
    let f = parse_poly_auto(text, n)?;
    if (express || sl) && f.basis() == Basis::X {
        limits.check(n, Basis::Y)?;
    }
    let mut r = Report::new("invariant", params);
    let inv = invariant::is_invariant(&f);
    r.line(format!("n: {n}"));
    r.line(format!("basis: {}", f.basis().name()));
    r.line(format!("input: {f}"));
    r.line(format!("D-invariant: {}", inv.d_invariant));
    r.line(format!("Delta-invariant: {}", inv.delta_invariant));
    r.line(format!("invariant: {}", inv.invariant()));
    r.detail("input", report::poly(&f));
    r.detail("d_invariant", json!(inv.d_invariant));
    r.detail("delta_invariant", json!(inv.delta_invariant));
    r.detail("invariant", json!(inv.invariant()));
    if !inv.invariant() {
        r.verdict = Verdict::Fail;
        if let Some((e, c)) = &inv.witness {
            let term = Poly::monomial(f.basis(), e.clone(), c)?;
            r.line(format!("witness: D f has term {term}"));
            r.detail("witness", json!({ "exponents": report::exponents(e), "coeff": report::element(c) }));
        }
    }
    if sl {
        let sl_inv = invariant::is_sl_invariant(&f)?;
        r.line(format!("sl-invariant: {sl_inv}"));
        r.detail("sl_invariant", json!(sl_inv));
        if !sl_inv {
            r.verdict = Verdict::Fail;
            let g = ensure_y(&f)?;
            if let Some((e, _)) = g.terms().into_iter().find(|(e, _)| e.entries().windows(2).any(|w| w[0] != w[1])) {
                r.line(format!("sl witness: {}", y_monomial(&e)));
                r.detail("sl_witness", report::exponents(&e));
            }
        }
    }
    if express {
        if inv.invariant() {
            let e = invariant::express_in_generators(&f)?;
            r.line(format!("expression: {e}"));
            r.detail("expression", json!(e.to_string()));
        } else {
            r.line("expression: none (not invariant)");
            r.detail("expression", Value::Null);
        }
    }
    Ok(r)
}

fn oracle_text(o: &OracleResult) -> (String, Value) {
    match o {
        OracleResult::Member(d) => {
            (format!("member ({d})"), json!({ "result": "Member", "decomposition": d.to_string() }))
        }
        OracleResult::NonMember { bound } => (
            format!("non-member (exhaustive up to {bound} generators)"),
            json!({ "result": "NonMember", "bound": bound }),
        ),
        OracleResult::BudgetExceeded { budget } => {
            (format!("undecided (budget {budget} exceeded)"), json!({ "result": "BudgetExceeded", "budget": budget }))
        }
    }
}

fn cmd_gap_witness(n: usize, params: Value) -> Result<Report> {
    check_n(n)?;
    let w = invariant::gap_witness(n)?;
    let mut r = Report::new("invariant", params);
    let in_ring = matches!(w.oracle, OracleResult::Member(_));
    let (oracle_line, oracle_json) = oracle_text(&w.oracle);
    r.line(format!("n: {n}"));
    r.line(format!("monomial: {}", y_monomial(&w.alpha)));
    r.line(format!("alpha: {}", w.alpha));
    r.line(format!("invariant: {}", w.invariant));
    r.line(format!("in R_n: {in_ring}"));
    r.line(format!("oracle: {oracle_line}"));
    r.detail("monomial", json!(y_monomial(&w.alpha)));
    r.detail("alpha", report::exponents(&w.alpha));
    r.detail("invariant", json!(w.invariant));
    r.detail("in_subring", json!(in_ring));
    r.detail("oracle", oracle_json);
    if !w.confirmed() {
        r.verdict = Verdict::Fail;
    }
    Ok(r)
}

fn cmd_kernel(n: usize, p: usize, q: usize, text: &str, certificate: bool, params: Value) -> Result<Report> {
    check_n(n)?;
    let ring = GenRing::new(n, p, q)?;
    let f = ideal::parse_gen_poly(text, ring)?;
    let image: Poly = ideal::rho_prime_apply(&f);
    let mut r = Report::new("kernel", params);
    r.line(format!("ring: n = {n}, p = {p}, q = {q}"));
    r.line(format!("input: {f}"));
    r.line(format!("image: {image}"));
    r.detail("image", report::poly(&image));
    match ideal::kernel_membership(&f, certificate) {
        KernelResult::InKernel(cert) => {
            r.line("result: InKernel");
            r.detail("result", json!("InKernel"));
            if let Some(c) = cert {
                let ok = ideal::verify_certificate(&f, &c)?;
                r.line(format!("certificate: {c}"));
                r.line(format!("certificate verified: {ok}"));
                let cofactors: Vec<Value> = c.cofactors.iter().map(|g| json!(g.to_string())).collect();
                r.detail("certificate", json!({ "cofactors": cofactors, "verified": ok }));
                if !ok {
                    r.verdict = Verdict::Fail;
                }
            }
        }
        KernelResult::NotInKernel { witness, coeff } => {
            r.verdict = Verdict::Fail;
            r.line("result: NotInKernel");
            r.line(format!("witness: {}", Poly::monomial(Basis::Y, witness.clone(), &coeff)?));
            r.detail("result", json!("NotInKernel"));
            r.detail(
                "witness",
                json!({
                    "monomial": y_monomial(&witness),
                    "exponents": report::exponents(&witness),
                    "coeff": report::element(&coeff),
                }),
            );
        }
    }
    Ok(r)
}

fn parse_alpha(text: &str, n: usize) -> Result<ExpVec> {
    let mut v = Vec::new();
    let mut pos = 0;
    for part in text.split(',') {
        let t = part.trim();
        let x: i64 = t.parse().map_err(|_| Error::Syntax { pos, msg: format!("expected an integer, found {t:?}") })?;
        v.push(x);
        pos += part.len() + 1;
    }
    if v.len() != n {
        return Err(Error::LengthMismatch { expected: n, found: v.len() });
    }
    Ok(ExpVec::new(v))
}

fn cmd_decompose(n: usize, alpha: &str, params: Value) -> Result<Report> {
    check_n(n)?;
    let alpha = parse_alpha(read_expr(alpha)?.as_str(), n)?;
    let d = lattice::decompose(&alpha, n)?;
    let exact = d.reconstruct() == alpha;
    let mut r = Report::new("decompose", params);
    r.line(format!("alpha: {alpha}"));
    r.line(format!("decomposition: {d}"));
    r.line(format!("reconstruction exact: {exact}"));
    let coeffs: Vec<Value> = d.coeffs.iter().map(|(g, k)| json!({ "p": g.p, "i": g.i, "coeff": k })).collect();
    r.detail("decomposition", Value::Array(coeffs));
    r.detail("reconstruction_exact", json!(exact));
    if !exact {
        r.verdict = Verdict::Fail;
        r.detail("reconstruction", report::exponents(&d.reconstruct()));
    }
    Ok(r)
}

fn cmd_counterexample(n: usize, params: Value) -> Result<Report> {
    check_n(n)?;
    let alpha = lattice::counterexample(n)?;
    let in_vn = lattice::in_vn(&alpha);
    let oracle = lattice::monoid_member_oracle(&alpha, n, u64::MAX)?;
    let (oracle_line, oracle_json) = oracle_text(&oracle);
    let mut r = Report::new("counterexample", params);
    r.line(format!("alpha: {alpha}"));
    r.line(format!("monomial: {}", y_monomial(&alpha)));
    r.line(format!("in V_n: {in_vn}"));
    r.line(format!("oracle: {oracle_line}"));
    r.detail("alpha", report::exponents(&alpha));
    r.detail("in_vn", json!(in_vn));
    r.detail("oracle", oracle_json);
    if !(in_vn && matches!(oracle, OracleResult::NonMember { .. })) {
        r.verdict = Verdict::Fail;
    }
    Ok(r)
}

fn cmd_verify_all(n_max: usize, seed: u64, limits: &Limits, params: Value) -> Result<Report> {
    let results = verify::verify_all(n_max, limits, seed)?;
    let mut r = Report::new("verify-all", params);
    let mut checks = Vec::new();
    for c in &results {
        let tag = if c.passed { "PASS" } else { "FAIL" };
        r.line(format!("{tag} {}: {}", c.name, c.detail));
        r.timings_ms.insert(c.name.to_string(), c.elapsed_ms);
        checks.push(json!({ "name": c.name, "passed": c.passed, "detail": c.detail }));
    }
    let failed = results.iter().filter(|c| !c.passed).count();
    r.line(format!("{} checks, {failed} failed", results.len()));
    r.detail("checks", Value::Array(checks));
    r.detail("failed", json!(failed));
    if failed > 0 {
        r.verdict = Verdict::Fail;
    }
    Ok(r)
}

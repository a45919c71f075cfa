//! Subcommand implementations. Each one renders a complete output string;
//! exit-code policy: 0 = checks pass / result produced, 1 = mathematical
//! failure or degenerate input, 2 = usage error.

use std::env;

use num_traits::Zero;

use sl2fd_core::exactpoly::{rat_int, rat_to_string, Poly, Rat};
use sl2fd_core::families::FamilyPreset;
use sl2fd_core::opalg::{HeisenbergRep, ShiftOp};
use sl2fd_core::qes::{qes_char_poly, three_point_check, QesParams};
use sl2fd_core::sl2::{explicit_difference_generators, sl2_generators, verify_relations};
use sl2fd_core::solvable::{eigenpolys, isospectral_check, spectrum, SolvableParams};
use sl2fd_core::Error as CoreError;

use crate::args::{Cli, Cmd, FamilyFlags, FamilyName, Format, ParamFlags, RepKind};
use crate::output::*;
use crate::roots::poly_roots;

pub const FORMAT_ENV: &str = "SL2FD_FORMAT";

/// Rendered result bound for stdout (or the --output file).
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
}

/// Usage-level failure: message for stderr, exit code 2.
#[derive(Debug)]
pub struct Usage(pub String);

type CmdResult = Result<Outcome, Usage>;

fn ok(stdout: String) -> CmdResult {
    Ok(Outcome { code: 0, stdout })
}

fn usage(msg: &str) -> Usage {
    Usage(msg.to_string())
}

fn resolve_format(cli: &Cli) -> Result<Format, Usage> {
    if let Some(f) = cli.format {
        return Ok(f);
    }
    match env::var(FORMAT_ENV) {
        Ok(v) => match v.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "plain" => Ok(Format::Plain),
            other => Err(Usage(format!(
                "{FORMAT_ENV} must be json, csv, or plain (got {other:?})"
            ))),
        },
        Err(_) => Ok(Format::Json),
    }
}

fn check_delta(delta: &Rat) -> Result<(), Usage> {
    if delta.is_zero() {
        Err(usage("delta must be nonzero"))
    } else {
        Ok(())
    }
}

fn solvable_params(flags: &ParamFlags) -> Result<SolvableParams, Usage> {
    check_delta(&flags.delta)?;
    Ok(SolvableParams::new(
        flags.a1.clone(),
        flags.a2.clone(),
        flags.a3.clone(),
        flags.a4.clone(),
        flags.a5.clone(),
        flags.delta.clone(),
    ))
}

/// Mathematical failures become exit 1 with a structured error document;
/// precondition violations become usage errors.
fn core_failure(err: CoreError) -> CmdResult {
    let doc = match err {
        CoreError::DegenerateSpectrum { k, j } => ErrorOut {
            error: "degenerate_spectrum".into(),
            k: Some(k),
            j: Some(j),
            detail: None,
        },
        CoreError::NonzeroRemainder => ErrorOut {
            error: "nonzero_remainder".into(),
            k: None,
            j: None,
            detail: None,
        },
        CoreError::InvarianceViolation { column } => ErrorOut {
            error: "invariance_violation".into(),
            k: Some(column),
            j: None,
            detail: None,
        },
        CoreError::InvalidParameter(msg) => return Err(usage(msg)),
        CoreError::InvalidRational(s) => {
            return Err(Usage(format!("invalid rational literal: {s}")))
        }
        other => ErrorOut {
            error: "internal".into(),
            k: None,
            j: None,
            detail: Some(other.to_string()),
        },
    };
    Ok(Outcome { code: 1, stdout: to_json(&doc) })
}

pub fn run(cli: &Cli) -> CmdResult {
    let format = resolve_format(cli)?;
    match &cli.command {
        Cmd::Verify { rep, delta, n, deg } => cmd_verify(format, *rep, delta, *n, *deg),
        Cmd::Spectrum { params, kmax } => cmd_spectrum(format, params, *kmax),
        Cmd::Eigenpoly { params, rep, kmax } => cmd_eigenpoly(format, params, *rep, *kmax),
        Cmd::Family { family, k, dump_points } => cmd_family(format, family, *k, *dump_points),
        Cmd::Factor { family, k } => cmd_factor(format, family, *k),
        Cmd::Isospectral { params, kmax } => cmd_isospectral(format, params, *kmax),
        Cmd::Qes { aplus, params, n } => cmd_qes(format, aplus, params, *n),
    }
}

fn rep_name(rep: RepKind) -> &'static str {
    match rep {
        RepKind::Differential => "differential",
        RepKind::Difference => "difference",
    }
}

fn cmd_verify(format: Format, rep: RepKind, delta: &Rat, n: u32, deg: usize) -> CmdResult {
    check_delta(delta)?;
    let realized = match rep {
        RepKind::Differential => HeisenbergRep::Differential,
        RepKind::Difference => HeisenbergRep::difference(delta.clone()),
    };
    let report = verify_relations(n, &realized, deg);
    let mut checks: Vec<CheckOut> = report
        .checks
        .iter()
        .map(|c| CheckOut { name: c.name.to_string(), pass: c.pass })
        .collect();

    // the closed-form difference triple must coincide with the general
    // construction at n = 0, as operators, not merely on test vectors
    let explicit = explicit_difference_generators(delta);
    let general = sl2_generators(0, &HeisenbergRep::difference(delta.clone()));
    checks.push(CheckOut {
        name: "difference_triple_closed_form".into(),
        pass: explicit.jplus == general.jplus
            && explicit.jzero == general.jzero
            && explicit.jminus == general.jminus,
    });
    checks.push(CheckOut {
        name: "step_reflection".into(),
        pass: ShiftOp::d_plus(-delta.clone()).canonical()
            == ShiftOp::d_minus(delta.clone()).canonical(),
    });

    let pass = checks.iter().all(|c| c.pass);
    let doc = VerifyOut {
        rep: rep_name(rep).into(),
        delta: rat_to_string(delta),
        n,
        deg,
        checks,
        pass,
    };
    let stdout = match format {
        Format::Json => to_json(&doc),
        Format::Plain => {
            let mut lines: Vec<String> = doc
                .checks
                .iter()
                .map(|c| format!("{}: {}", c.name, if c.pass { "pass" } else { "fail" }))
                .collect();
            lines.push(format!("all: {}", if pass { "pass" } else { "fail" }));
            lines.join("\n")
        }
        Format::Csv => return Err(usage("reports have no csv form; use json or plain")),
    };
    Ok(Outcome { code: if pass { 0 } else { 1 }, stdout })
}

fn cmd_spectrum(format: Format, flags: &ParamFlags, kmax: usize) -> CmdResult {
    let params = solvable_params(flags)?;
    let lambdas = spectrum(&params, kmax);
    let stdout = match format {
        Format::Json => to_json(&SpectrumOut {
            delta: rat_to_string(&params.delta),
            kmax,
            lambda: rat_strings(&lambdas),
        }),
        Format::Csv => {
            let mut lines = vec!["k,lambda".to_string()];
            lines.extend(
                lambdas
                    .iter()
                    .enumerate()
                    .map(|(k, l)| format!("{k},{}", rat_to_string(l))),
            );
            lines.join("\n")
        }
        Format::Plain => lambdas
            .iter()
            .enumerate()
            .map(|(k, l)| format!("lambda_{k} = {}", rat_to_string(l)))
            .collect::<Vec<_>>()
            .join("\n"),
    };
    ok(stdout)
}

fn cmd_eigenpoly(format: Format, flags: &ParamFlags, rep: RepKind, kmax: usize) -> CmdResult {
    let params = solvable_params(flags)?;
    let realized = match rep {
        RepKind::Differential => HeisenbergRep::Differential,
        RepKind::Difference => params.difference_rep(),
    };
    let result = match eigenpolys(&params, &realized, kmax) {
        Ok(r) => r,
        Err(e) => return core_failure(e),
    };
    let entries: Vec<EntryOut> = result
        .entries
        .iter()
        .map(|e| EntryOut {
            k: e.k,
            lambda: rat_to_string(&e.lambda),
            poly: poly_strings(&e.poly),
        })
        .collect();
    let stdout = match format {
        Format::Json => to_json(&EigenpolyOut { rep: rep_name(rep).into(), kmax, entries }),
        Format::Plain => result
            .entries
            .iter()
            .map(|e| format!("k={} lambda={} poly={}", e.k, rat_to_string(&e.lambda), e.poly))
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Csv => return Err(usage("polynomials have no csv form; use json or plain")),
    };
    ok(stdout)
}

fn need(flag: &Option<Rat>, name: &str, family: &str) -> Result<Rat, Usage> {
    flag.clone()
        .ok_or_else(|| Usage(format!("--{name} is required for --name {family}")))
}

fn build_preset(flags: &FamilyFlags) -> Result<FamilyPreset, Usage> {
    Ok(match flags.name {
        FamilyName::Hahn => FamilyPreset::Hahn {
            alpha: need(&flags.alpha, "alpha", "hahn")?,
            beta: need(&flags.beta, "beta", "hahn")?,
            n_param: need(&flags.n_param, "N", "hahn")?,
        },
        FamilyName::HahnTilde => FamilyPreset::HahnTilde {
            mu: need(&flags.mu, "mu", "hahn-tilde")?,
            nu: need(&flags.nu, "nu", "hahn-tilde")?,
            n_param: need(&flags.n_param, "N", "hahn-tilde")?,
        },
        FamilyName::Meixner => FamilyPreset::Meixner {
            gamma: need(&flags.gamma, "gamma", "meixner")?,
            mu: need(&flags.mu, "mu", "meixner")?,
        },
        FamilyName::Charlier => FamilyPreset::Charlier {
            mu: need(&flags.mu, "mu", "charlier")?,
        },
    })
}

fn family_name_str(name: FamilyName) -> &'static str {
    match name {
        FamilyName::Hahn => "hahn",
        FamilyName::HahnTilde => "hahn-tilde",
        FamilyName::Meixner => "meixner",
        FamilyName::Charlier => "charlier",
    }
}

fn cmd_family(
    format: Format,
    flags: &FamilyFlags,
    k: usize,
    dump_points: Option<usize>,
) -> CmdResult {
    let preset = build_preset(flags)?;
    let (poly, lambda) = match preset.polynomial(k) {
        Ok(r) => r,
        Err(e) => return core_failure(e),
    };
    if let Some(count) = dump_points {
        let lines: Vec<String> = (0..count as i64)
            .map(|x| {
                let xq = rat_int(x);
                format!("{x},{}", rat_to_string(&poly.eval(&xq)))
            })
            .collect();
        return ok(lines.join("\n"));
    }
    let stdout = match format {
        Format::Json => to_json(&FamilyOut {
            k,
            lambda: rat_to_string(&lambda),
            poly: poly_strings(&poly),
        }),
        Format::Plain => format!("k = {k}\nlambda = {}\npoly = {poly}", rat_to_string(&lambda)),
        Format::Csv => return Err(usage("polynomials have no csv form; use json or plain")),
    };
    ok(stdout)
}

fn cmd_factor(format: Format, flags: &FamilyFlags, k: usize) -> CmdResult {
    let preset = build_preset(flags)?;
    let quotient = match preset.hahn_factorization(k) {
        Ok(q) => q,
        Err(e) => return core_failure(e),
    };
    let doc = FactorOut {
        name: family_name_str(flags.name).into(),
        k,
        quotient: poly_strings(&quotient),
        remainder: poly_strings(&Poly::zero()),
    };
    let stdout = match format {
        Format::Json => to_json(&doc),
        Format::Plain => format!("quotient = {quotient}\nremainder = 0"),
        Format::Csv => return Err(usage("polynomials have no csv form; use json or plain")),
    };
    ok(stdout)
}

fn cmd_isospectral(format: Format, flags: &ParamFlags, kmax: usize) -> CmdResult {
    let params = solvable_params(flags)?;
    let report = match isospectral_check(&params, kmax) {
        Ok(r) => r,
        Err(e) => return core_failure(e),
    };
    let stdout = match format {
        Format::Json => to_json(&IsospectralOut {
            kmax,
            diagonal: rat_strings(&report.diagonal),
            pass: report.pass,
        }),
        Format::Csv => {
            let mut lines = vec!["k,lambda".to_string()];
            lines.extend(
                report
                    .diagonal
                    .iter()
                    .enumerate()
                    .map(|(k, l)| format!("{k},{}", rat_to_string(l))),
            );
            lines.join("\n")
        }
        Format::Plain => {
            let mut lines: Vec<String> = report
                .diagonal
                .iter()
                .enumerate()
                .map(|(k, l)| format!("lambda_{k} = {}", rat_to_string(l)))
                .collect();
            lines.push(format!("pass: {}", report.pass));
            lines.join("\n")
        }
    };
    Ok(Outcome { code: if report.pass { 0 } else { 1 }, stdout })
}

fn cmd_qes(format: Format, aplus: &Rat, flags: &ParamFlags, n: u32) -> CmdResult {
    check_delta(&flags.delta)?;
    let qp = QesParams::new(
        aplus.clone(),
        flags.a1.clone(),
        flags.a2.clone(),
        flags.a3.clone(),
        flags.a4.clone(),
        flags.a5.clone(),
        flags.delta.clone(),
        n,
    );
    let three_point = three_point_check(&qp);
    let cp_diff = match qes_char_poly(&qp, &HeisenbergRep::Differential) {
        Ok(p) => p,
        Err(e) => return core_failure(e),
    };
    let cp_shift = match qes_char_poly(&qp, &qp.difference_rep()) {
        Ok(p) => p,
        Err(e) => return core_failure(e),
    };
    let isospectral = cp_diff == cp_shift;
    let roots = poly_roots(&cp_shift)
        .into_iter()
        .map(|(re, im)| RootOut { re, im })
        .collect();
    let doc = QesOut {
        n,
        charpoly: poly_strings(&cp_shift),
        roots,
        isospectral,
        three_point,
    };
    let pass = isospectral && three_point;
    let stdout = match format {
        Format::Json => to_json(&doc),
        Format::Plain => {
            let roots = doc
                .roots
                .iter()
                .map(|r| format!("({}, {})", r.re, r.im))
                .collect::<Vec<_>>()
                .join(" ");
            format!(
                "charpoly = {cp_shift}\nroots = {roots}\nisospectral: {isospectral}\nthree_point: {three_point}"
            )
        }
        Format::Csv => return Err(usage("qes reports have no csv form; use json or plain")),
    };
    Ok(Outcome { code: if pass { 0 } else { 1 }, stdout })
}

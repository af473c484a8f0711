//! The `g2` command-line front end. Output is JSON (or DOT for strata) on stdout.
//! Exit status: 0 success, 1 a mathematical check failed, 2 usage error.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bethe::{
    admissible_ls, appendix_solution, bae_residual, chain_word, fertility_criterion, is_generic, poly_roots,
    reproduce, reproduction_chain, BetheData, PolyPair, BAE_TOLERANCE,
};
use crate::diffop::{exponents_at, h2_casimir_check, DiffOp, DyInstance, QRatFunc};
use crate::error::{Error, Result};
use crate::exact::{Point, QPoly};
use crate::json::poly_to_strings;
use crate::repn::{invariant_dim, tensor_decompose, weyl_dim};
use crate::rootdata::Weight;
use crate::sgrass::{
    polys_from_json, polys_to_json, reduced_wronski, space_wronskian, ssd_report, PolySpace, RamificationData,
};
use crate::strat::{hasse_diagram_bounded, DEFAULT_D_BOUND};
use crate::verify::{effective_lmax, run_suite, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "g2", version, about = "Exact computations for the G2 Gaudin model")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decompose V_left (x) V_right into irreducibles.
    Tensor {
        #[arg(long)]
        left: Weight,
        #[arg(long)]
        right: Weight,
    },
    /// Dimension of invariants in a tensor product; weights separated by ';'.
    Invdim {
        #[arg(long)]
        weights: String,
    },
    /// Closed-form Bethe solution for (lambda, w2) at z = (0, 1).
    Bae {
        #[arg(long)]
        lambda: Weight,
        #[arg(long)]
        case: usize,
        /// Add floating-point roots and the residual of the Bethe equations.
        #[arg(long)]
        numeric: bool,
    },
    /// Check genericity, fertility and the Bethe equations for a closed-form solution.
    BaeVerify {
        #[arg(long)]
        lambda: Weight,
        #[arg(long)]
        case: usize,
    },
    /// Reproduce a closed-form solution in one direction, or run the chain reaching a case.
    Reproduce {
        #[arg(long)]
        lambda: Weight,
        #[arg(long)]
        case: usize,
        /// Direction 1 or 2; without it the chain from (1,1) to the case is printed.
        #[arg(long)]
        direction: Option<usize>,
    },
    /// Coefficients of the seventh-order operator attached to a solution.
    Diffop {
        #[arg(long)]
        lambda: Weight,
        #[arg(long)]
        case: usize,
        /// Conjugate by T1^2 T2.
        #[arg(long)]
        conjugated: bool,
    },
    /// Polynomial kernel of the operator.
    Kernel {
        #[arg(long)]
        lambda: Weight,
        #[arg(long)]
        case: usize,
    },
    /// Local exponents at 0, 1 or inf.
    Exponents {
        #[arg(long)]
        lambda: Weight,
        #[arg(long)]
        case: usize,
        #[arg(long)]
        at: Point,
        #[arg(long)]
        conjugated: bool,
    },
    /// Compare the residue of the d^5 coefficient with the Gaudin eigenvalue.
    H2check {
        #[arg(long)]
        lambda: Weight,
        #[arg(long)]
        case: usize,
    },
    /// Self-duality and self-self-duality checks on a space of polynomials.
    SsdCheck {
        #[arg(long)]
        space: PathBuf,
        #[arg(long)]
        ram: PathBuf,
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Wronskian and reduced Wronskian of a space.
    Wronski {
        #[arg(long)]
        space: PathBuf,
    },
    /// Stratification of the self-self-dual Grassmannian.
    Strata {
        #[arg(long)]
        d: i64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_D_BOUND)]
        bound: i64,
    },
    /// Run an acceptance suite (or "all").
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Format {
    Dot,
    Json,
}

/// Parse `argv` (including the program name), run, and return the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_usage() {
                EXIT_USAGE
            } else {
                EXIT_CHECK_FAILED
            }
        }
    }
}

fn emit(out: &mut dyn Write, v: &Value) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, v)?;
    writeln!(out)?;
    Ok(())
}

fn weight_json(w: Weight) -> Value {
    json!([w.0, w.1])
}

fn poly_json(p: &QPoly) -> Value {
    json!({ "render": p.to_string(), "coeffs": poly_to_strings(p) })
}

fn pair_json(y: &PolyPair) -> Value {
    json!({ "y1": poly_json(&y.y1), "y2": poly_json(&y.y2) })
}

fn ratfunc_json(f: &QRatFunc) -> Value {
    json!({ "render": f.to_string(), "num": poly_to_strings(f.num()), "den": poly_to_strings(f.den()) })
}

fn data_json(d: &BetheData) -> Value {
    json!({
        "weights": d.weights.iter().map(|w| weight_json(*w)).collect::<Vec<_>>(),
        "points": d.points.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "l": [d.l.0, d.l.1],
    })
}

fn read(path: &PathBuf) -> Result<String> {
    Ok(std::fs::read_to_string(path)?)
}

fn operator_json(d: &DiffOp) -> Value {
    let coeffs: Vec<Value> = (0..d.order())
        .rev()
        .map(|k| json!({ "order": k, "coefficient": ratfunc_json(&d.coeff(k)) }))
        .collect();
    json!({ "order": d.order(), "coefficients": coeffs })
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Tensor { left, right } => {
            let dec = tensor_decompose(left, right)?;
            let summands = dec
                .iter()
                .rev()
                .map(|(w, m)| Ok(json!({ "weight": weight_json(*w), "multiplicity": m, "dim": weyl_dim(*w)? })))
                .collect::<Result<Vec<_>>>()?;
            emit(out, &json!({ "left": weight_json(left), "right": weight_json(right), "summands": summands }))?;
        }
        Command::Invdim { weights } => {
            let ws = weights
                .split(';')
                .filter(|s| !s.trim().is_empty())
                .map(str::parse::<Weight>)
                .collect::<Result<Vec<_>>>()?;
            let n = invariant_dim(&ws)?;
            emit(out, &json!({ "weights": ws.iter().map(|w| weight_json(*w)).collect::<Vec<_>>(), "invariant_dim": n }))?;
        }
        Command::Bae { lambda, case, numeric } => {
            let y = appendix_solution(lambda, case)?;
            let data = BetheData::two_point(lambda, case);
            let mut v = json!({ "lambda": weight_json(lambda), "case": case, "data": data_json(&data), "solution": pair_json(&y) });
            if numeric {
                let roots = |p: &QPoly| -> Vec<Value> { poly_roots(p).iter().map(|z| json!([z.re, z.im])).collect() };
                v["numeric"] = json!({
                    "note": "floating-point values",
                    "y1_roots": roots(&y.y1),
                    "y2_roots": roots(&y.y2),
                    "bae_residual": bae_residual(&y, &data.weights, &data.points)?,
                });
            }
            emit(out, &v)?;
        }
        Command::BaeVerify { lambda, case } => {
            let y = appendix_solution(lambda, case)?;
            let data = BetheData::two_point(lambda, case);
            let generic = is_generic(&y, &data.weights, &data.points);
            let fertile = fertility_criterion(&y, &data)?;
            let residual = bae_residual(&y, &data.weights, &data.points)?;
            let ok = generic && fertile && residual < BAE_TOLERANCE;
            emit(
                out,
                &json!({ "lambda": weight_json(lambda), "case": case, "generic": generic, "fertile": fertile,
                         "bae_residual": residual, "tolerance": BAE_TOLERANCE, "ok": ok }),
            )?;
            return Ok(if ok { EXIT_OK } else { EXIT_CHECK_FAILED });
        }
        Command::Reproduce { lambda, case, direction } => match direction {
            Some(j) => {
                if j != 1 && j != 2 {
                    return Err(Error::InvalidInput(format!("direction must be 1 or 2, got {j}")));
                }
                let y = appendix_solution(lambda, case)?;
                let data = BetheData::two_point(lambda, case);
                let v = match reproduce(&y, j, &data)? {
                    Some((ny, nd)) => json!({ "direction": j, "generic": true, "solution": pair_json(&ny), "data": data_json(&nd) }),
                    None => json!({ "direction": j, "generic": false }),
                };
                emit(out, &v)?;
            }
            None => {
                if !admissible_ls(lambda)?.contains(&case) {
                    return Err(Error::NotAdmissible { l1: lambda.0, l2: lambda.1, case });
                }
                let word = chain_word(case)
                    .ok_or_else(|| Error::InvalidInput(format!("case {case} is not reached by a reproduction chain")))?;
                let steps = reproduction_chain(lambda, word)?;
                let target = appendix_solution(lambda, case)?;
                let matches = steps.last().map(|s| s.pair.projectively_eq(&target)).unwrap_or(target == PolyPair::trivial());
                let chain: Vec<Value> = steps
                    .iter()
                    .map(|s| json!({ "direction": s.direction, "solution": pair_json(&s.pair), "data": data_json(&s.data) }))
                    .collect();
                emit(out, &json!({ "lambda": weight_json(lambda), "case": case, "word": word, "chain": chain, "matches_closed_form": matches }))?;
                return Ok(if matches { EXIT_OK } else { EXIT_CHECK_FAILED });
            }
        },
        Command::Diffop { lambda, case, conjugated } => {
            let inst = DyInstance::new(lambda, case)?;
            let d = if conjugated { inst.conjugated()? } else { inst.dy.clone() };
            let mut v = operator_json(&d);
            v["lambda"] = weight_json(lambda);
            v["case"] = json!(case);
            v["conjugated"] = json!(conjugated);
            emit(out, &v)?;
        }
        Command::Kernel { lambda, case } => {
            let inst = DyInstance::new(lambda, case)?;
            let k = inst.kernel()?;
            emit(out, &polys_to_json(&k))?;
        }
        Command::Exponents { lambda, case, at, conjugated } => {
            let inst = DyInstance::new(lambda, case)?;
            let d = if conjugated { inst.conjugated()? } else { inst.dy.clone() };
            let e = exponents_at(&d, &at)?;
            emit(out, &json!({ "point": at.to_string(), "conjugated": conjugated, "exponents": e.exponents }))?;
        }
        Command::H2check { lambda, case } => {
            let r = h2_casimir_check(lambda, case)?;
            emit(out, &serde_json::to_value(&r)?)?;
            return Ok(if r.ok { EXIT_OK } else { EXIT_CHECK_FAILED });
        }
        Command::SsdCheck { space, ram, witness } => {
            let x = PolySpace::new(polys_from_json(&read(&space)?)?)?;
            let r = RamificationData::from_json(&read(&ram)?)?;
            let w = match witness {
                Some(p) => Some(polys_from_json(&read(&p)?)?),
                None => None,
            };
            let rep = ssd_report(&x, &r, w.as_deref())?;
            let ok = rep.self_dual && rep.witness_given.unwrap_or(rep.witness_found);
            emit(out, &serde_json::to_value(&rep)?)?;
            return Ok(if ok { EXIT_OK } else { EXIT_CHECK_FAILED });
        }
        Command::Wronski { space } => {
            let x = PolySpace::new(polys_from_json(&read(&space)?)?)?;
            let w = space_wronskian(&x);
            let reduced = reduced_wronski(&x).ok();
            emit(
                out,
                &json!({ "wronskian": poly_json(&w), "reduced": reduced.as_ref().map(poly_json) }),
            )?;
            if reduced.is_none() {
                return Ok(EXIT_CHECK_FAILED);
            }
        }
        Command::Strata { d, format, bound } => {
            let h = hasse_diagram_bounded(d, bound)?;
            match format {
                Format::Dot => out.write_all(h.to_dot().as_bytes())?,
                Format::Json => emit(out, &h.to_json())?,
            }
        }
        Command::Verify { suite } => {
            let suites: Vec<Suite> = if suite == "all" { Suite::ALL.to_vec() } else { vec![suite.parse()?] };
            let env = std::env::var("G2_LMAX").ok();
            let mut all_ok = true;
            for s in suites {
                let lmax = effective_lmax(s, env.as_deref())?;
                let r = run_suite(s, lmax);
                writeln!(out, "{}", r.line())?;
                all_ok &= r.passed;
            }
            return Ok(if all_ok { EXIT_OK } else { EXIT_CHECK_FAILED });
        }
    }
    Ok(EXIT_OK)
}

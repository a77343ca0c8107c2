//! Command-line front end: winding numbers, Cauchy indices, weighted root
//! counting and complex root isolation on exact rational inputs.

mod expr;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde_json::json;

use rectwind::oracle::numeric_winding;
use rectwind::{
    aux_product_sides, count_weighted, count_weighted_even, ind_interval, isolate, wind_w_big,
    wind_w_raw_sum, Error, PolyPair, QuarterInt, Rational, RationalFunction, Rectangle,
};

#[derive(Parser)]
#[command(name = "rectwind", version, about = "Exact winding numbers, weighted root counts and root isolation on rectangles", disable_help_subcommand = true)]
struct Cli {
    /// Emit machine-readable JSON instead of plain text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// W = (w(F) + w(iF))/2; valid for any nonzero function
    #[value(name = "W")]
    Big,
    /// plain w; requires even vertex valuations
    #[value(name = "w")]
    Small,
}

#[derive(Subcommand)]
enum Command {
    /// Weighted count of zeros minus poles in a rectangle
    Count {
        /// Rectangle as x0,x1,y0,y1 (rationals)
        #[arg(long)]
        rect: String,
        #[arg(long, value_enum)]
        method: Method,
        /// Expression in Z, e.g. "(Z-i)^2/(Z-1)"
        expr: String,
    },
    /// Winding number w of the boundary curve
    #[command(name = "wind-w")]
    WindW {
        #[arg(long)]
        rect: String,
        /// Also print the four oriented edge Cauchy indices
        #[arg(long)]
        edges: bool,
        expr: String,
    },
    /// Winding number W = (w(F) + w(iF))/2
    #[command(name = "wind-W")]
    WindBigW {
        #[arg(long)]
        rect: String,
        /// Also print the edge Cauchy indices of F and iF
        #[arg(long)]
        edges: bool,
        expr: String,
    },
    /// Cauchy index Ind_a^b(P, Q) of two real polynomials in X
    Cauchy {
        /// Interval as a,b (rationals, a < b allowed in either order)
        #[arg(long)]
        interval: String,
        p: String,
        q: String,
    },
    /// Both sides of the auxiliary product formula for a quadruple P,Q,R,S
    #[command(name = "aux-check")]
    AuxCheck {
        #[arg(long)]
        interval: String,
        p: String,
        q: String,
        r: String,
        s: String,
    },
    /// Isolate all complex roots of a polynomial into disjoint boxes
    Isolate {
        /// Maximum box width and height (rational)
        #[arg(long)]
        eps: String,
        expr: String,
    },
    /// Exact count cross-checked against a numeric winding estimate
    Check {
        #[arg(long)]
        rect: String,
        expr: String,
    },
}

/// User-facing failure, split by exit code: 1 for malformed input, 2 for a
/// violated precondition.
enum Failure {
    Usage(String),
    Precondition(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Precondition(e.to_string())
    }
}

impl From<expr::SyntaxError> for Failure {
    fn from(e: expr::SyntaxError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<expr::LowerError> for Failure {
    fn from(e: expr::LowerError) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn parse_rational(s: &str) -> Result<Rational, Failure> {
    let parse_int = |t: &str| {
        t.trim()
            .parse::<num_bigint::BigInt>()
            .map_err(|_| Failure::Usage(format!("not a rational number: '{}'", s)))
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(Failure::Usage(format!("zero denominator in '{}'", s)));
            }
            Ok(Rational::new(parse_int(n)?, d))
        }
        None => Ok(Rational::from_integer(parse_int(s)?)),
    }
}

fn parse_rect(s: &str) -> Result<Rectangle, Failure> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 4 {
        return Err(Failure::Usage(format!(
            "--rect expects x0,x1,y0,y1, got '{}'",
            s
        )));
    }
    let vals: Vec<Rational> = parts
        .iter()
        .map(|p| parse_rational(p))
        .collect::<Result<_, _>>()?;
    Rectangle::new(
        vals[0].clone(),
        vals[1].clone(),
        vals[2].clone(),
        vals[3].clone(),
    )
    .map_err(Failure::from)
}

fn parse_interval(s: &str) -> Result<(Rational, Rational), Failure> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(Failure::Usage(format!("--interval expects a,b, got '{}'", s)));
    }
    Ok((parse_rational(parts[0])?, parse_rational(parts[1])?))
}

fn parse_function(text: &str) -> Result<RationalFunction, Failure> {
    Ok(expr::lower_rational_function(&expr::parse_expr(text, 'Z')?)?)
}

fn parse_real_poly(text: &str) -> Result<rectwind::RealPoly, Failure> {
    Ok(expr::lower_real_polynomial(&expr::parse_expr(text, 'X')?)?)
}

fn rect_json(rect: &Rectangle) -> serde_json::Value {
    json!({
        "x0": rect.x0.to_string(),
        "x1": rect.x1.to_string(),
        "y0": rect.y0.to_string(),
        "y1": rect.y1.to_string(),
    })
}

fn emit_value(
    json_mode: bool,
    command: &str,
    input: serde_json::Value,
    value: &Rational,
    details: Option<serde_json::Value>,
) {
    if json_mode {
        let mut out = json!({
            "command": command,
            "input": input,
            "result": { "value": value.to_string() },
        });
        if let Some(d) = details {
            out["details"] = d;
        }
        println!("{}", out);
    } else {
        println!("{}", value);
        if let Some(d) = details {
            for (k, v) in d.as_object().into_iter().flatten() {
                println!("{}: {}", k, v);
            }
        }
    }
}

fn edges_json(indices: &[rectwind::HalfInt; 4]) -> serde_json::Value {
    json!({
        "bottom": indices[0].value().to_string(),
        "right": indices[1].value().to_string(),
        "top": indices[2].value().to_string(),
        "left": indices[3].value().to_string(),
    })
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Count { rect, method, expr } => {
            let rectangle = parse_rect(&rect)?;
            let f = parse_function(&expr)?;
            let count = match method {
                Method::Big => count_weighted(&f, &rectangle)?,
                Method::Small => count_weighted_even(&f, &rectangle)?,
            };
            let input = json!({
                "rect": rect_json(&rectangle),
                "method": if method == Method::Big { "W" } else { "w" },
                "expr": expr,
            });
            emit_value(cli.json, "count", input, count.value.value(), None);
        }
        Command::WindW { rect, edges, expr } => {
            let rectangle = parse_rect(&rect)?;
            let f = parse_function(&expr)?;
            let (indices, total) = wind_w_raw_sum(&f, &rectangle)?;
            let details = edges.then(|| json!({ "edges": edges_json(&indices) }));
            let input = json!({ "rect": rect_json(&rectangle), "expr": expr });
            emit_value(cli.json, "wind-w", input, total.value(), details);
        }
        Command::WindBigW { rect, edges, expr } => {
            let rectangle = parse_rect(&rect)?;
            let f = parse_function(&expr)?;
            let total = wind_w_big(&f, &rectangle)?;
            let details = if edges {
                let (ind_f, _) = wind_w_raw_sum(&f, &rectangle)?;
                let (ind_if, _) = wind_w_raw_sum(&f.times_i(), &rectangle)?;
                Some(json!({
                    "edges_f": edges_json(&ind_f),
                    "edges_if": edges_json(&ind_if),
                }))
            } else {
                None
            };
            let input = json!({ "rect": rect_json(&rectangle), "expr": expr });
            emit_value(cli.json, "wind-W", input, total.value(), details);
        }
        Command::Cauchy { interval, p, q } => {
            let (a, b) = parse_interval(&interval)?;
            let pp = parse_real_poly(&p)?;
            let qq = parse_real_poly(&q)?;
            let ind = ind_interval(&PolyPair::new(pp, qq), &a, &b);
            let input = json!({
                "interval": [a.to_string(), b.to_string()],
                "p": p,
                "q": q,
            });
            emit_value(cli.json, "cauchy", input, ind.value(), None);
        }
        Command::AuxCheck {
            interval,
            p,
            q,
            r,
            s,
        } => {
            let (a, b) = parse_interval(&interval)?;
            let pp = parse_real_poly(&p)?;
            let qq = parse_real_poly(&q)?;
            let rr = parse_real_poly(&r)?;
            let ss = parse_real_poly(&s)?;
            let (lhs, rhs, variant) = aux_product_sides(&pp, &qq, &rr, &ss, &a, &b)?;
            let pass = lhs == rhs;
            if cli.json {
                let out = json!({
                    "command": "aux-check",
                    "input": {
                        "interval": [a.to_string(), b.to_string()],
                        "p": p, "q": q, "r": r, "s": s,
                    },
                    "result": { "value": lhs.value().to_string() },
                    "details": {
                        "variant": variant.tag(),
                        "lhs": lhs.value().to_string(),
                        "rhs": rhs.value().to_string(),
                        "verdict": if pass { "PASS" } else { "FAIL" },
                    },
                });
                println!("{}", out);
            } else {
                println!("variant: {}", variant.tag());
                println!("lhs = {}", lhs.value());
                println!("rhs = {}", rhs.value());
                println!("{}", if pass { "PASS" } else { "FAIL" });
            }
        }
        Command::Isolate { eps, expr } => {
            let e = parse_rational(&eps)?;
            let f = expr::lower_polynomial(&expr::parse_expr(&expr, 'Z')?)?;
            let boxes = isolate(&f, &e)?;
            if cli.json {
                let out = json!({
                    "command": "isolate",
                    "input": { "eps": e.to_string(), "expr": expr },
                    "result": {
                        "boxes": boxes.iter().map(|b| json!({
                            "x0": b.rect.x0.to_string(),
                            "x1": b.rect.x1.to_string(),
                            "y0": b.rect.y0.to_string(),
                            "y1": b.rect.y1.to_string(),
                            "count": b.count,
                        })).collect::<Vec<_>>(),
                    },
                });
                println!("{}", out);
            } else {
                for b in &boxes {
                    println!(
                        "[{}, {}] x [{}, {}] count={}",
                        b.rect.x0, b.rect.x1, b.rect.y0, b.rect.y1, b.count
                    );
                }
            }
        }
        Command::Check { rect, expr } => {
            let rectangle = parse_rect(&rect)?;
            let f = parse_function(&expr)?;
            let exact: QuarterInt = count_weighted(&f, &rectangle)?.value;
            let numeric = numeric_winding(&f, &rectangle, 256)?;
            let exact_f64 = to_f64(exact.value());
            let agree = (numeric - exact_f64).abs() < 1e-3;
            if cli.json {
                let out = json!({
                    "command": "check",
                    "input": { "rect": rect_json(&rectangle), "expr": expr },
                    "result": { "value": exact.value().to_string() },
                    "details": {
                        "numeric": numeric,
                        "verdict": if agree { "AGREE" } else { "DISAGREE" },
                    },
                });
                println!("{}", out);
            } else {
                println!("exact: {}", exact.value());
                println!("numeric: {:.6}", numeric);
                println!("{}", if agree { "AGREE" } else { "DISAGREE" });
            }
        }
    }
    Ok(())
}

fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // clap's help/version are not failures
            if e.use_stderr() {
                eprint!("{}", e);
                return ExitCode::from(1);
            }
            print!("{}", e);
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(1)
        }
        Err(Failure::Precondition(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use cyclokit::combinat::{bell_complete, bell_partial, bernoulli_minus, bernoulli_plus, stirling_first, stirling_second};
use cyclokit::cyclocoeffs::{coeff_all, coeff_bell, coeff_direct, coeff_moller, coeff_prefix_recurrence, coeff_taylor_from_one};
use cyclokit::cycloderiv::{
    log_deriv_inverse_cyclo_at_minus_one, log_deriv_inverse_cyclo_at_zero, log_deriv_phi_at_minus_one,
    log_deriv_phi_at_one, log_deriv_phi_at_zero, schwarzian_phi_at_one, CTable,
};
use cyclokit::kronecker::{certify, factor_kronecker, Certificate};
use cyclokit::numtheory::{euler_phi, jordan_totient, ramanujan_sum};
use cyclokit::poly::{cyclotomic, inverse_cyclotomic, log_derivative_symbolic, log_derivatives_oracle, IntPoly};
use cyclokit::rational::{self, int};
use cyclokit::semigroup::{
    fk, fk_gcd_pattern, fk_theorem_sweep, noncyclotomic_symmetric_with_frobenius, NumericalSemigroup, SweepRow,
};
use cyclokit::{BigInt, BigRational, Error, Result};
use serde_json::{json, Value};

use crate::report::Report;
use crate::{
    BellCommand, Command, FkCommand, Gens, KroneckerCommand, LogderivArgs, LogderivTarget, Method, PolySource,
    SemigroupCommand, TableCommand,
};

const PHI_DEGREE_GUARD: u64 = 1_000_000;

fn q(v: &BigRational) -> String {
    rational::to_string(v)
}

fn qs(vs: &[BigRational]) -> Vec<String> {
    vs.iter().map(q).collect()
}

fn to_json<T: serde::Serialize>(v: &T) -> Result<Value> {
    serde_json::to_value(v).map_err(|e| Error::Invariant(format!("serialization failed: {e}")))
}

pub fn run(command: Command) -> Result<Report> {
    match command {
        Command::Phi { n, coeffs, poly: _, dump_coeffs, force } => phi(n, coeffs, dump_coeffs.as_deref(), force),
        Command::Coeff { n, k, method } => coeff(n, k, method),
        Command::Ramanujan { k, n } => {
            let r = ramanujan_sum(k, n);
            Ok(Report::new(r.to_string(), json!({ "k": k, "n": n, "value": r.to_string() })))
        }
        Command::Jordan { k, n } => {
            let j = jordan_totient(k, n);
            Ok(Report::new(j.to_string(), json!({ "k": k, "n": n, "value": j.to_string() })))
        }
        Command::Bernoulli { k, minus } => {
            let b = if minus { bernoulli_minus(k) } else { bernoulli_plus(k) };
            let sign = if minus { "-" } else { "+" };
            Ok(Report::new(q(&b), json!({ "k": k, "convention": sign, "value": q(&b) })))
        }
        Command::Stirling { kind, k, j } => {
            let v = if kind == 1 { stirling_first(k, j) } else { stirling_second(k, j) };
            Ok(Report::new(v.to_string(), json!({ "kind": kind, "k": k, "j": j, "value": v.to_string() })))
        }
        Command::Bellpoly { which } => bellpoly(which),
        Command::Logderiv(args) => logderiv(args),
        Command::Schwarzian { n } => {
            let s = schwarzian_phi_at_one(n)?;
            Ok(Report::new(q(&s), json!({ "n": n, "value": q(&s) })))
        }
        Command::Kronecker { action } => kronecker(action),
        Command::Semigroup { action } => semigroup(action),
        Command::Fk { action } => fk_command(action),
        Command::FrobeniusFamily { f } => {
            let s = noncyclotomic_symmetric_with_frobenius(f)?;
            let cert = s.is_cyclotomic()?;
            let mut report = semigroup_info(&s)?;
            writeln!(report.text, "certificate: {}", cert.reason.tag()).ok();
            report.json["certificate"] = to_json(&cert)?;
            Ok(report)
        }
        Command::Tables { which } => tables(which),
    }
}

fn phi(n: u64, as_coeffs: bool, dump: Option<&Path>, force: bool) -> Result<Report> {
    if n == 0 {
        return Err(Error::Domain("Φ_0 is undefined".into()));
    }
    let degree = euler_phi(n);
    if degree > PHI_DEGREE_GUARD && !force {
        return Err(Error::Resource(format!("φ({n}) = {degree} exceeds {PHI_DEGREE_GUARD}; pass --force")));
    }
    let p = cyclotomic(n);
    if let Some(path) = dump {
        let mut csv = String::from("index,coefficient\n");
        for (i, c) in p.coeffs().iter().enumerate() {
            writeln!(csv, "{i},{c}").ok();
        }
        fs::write(path, csv).map_err(|e| Error::Input(format!("cannot write {}: {e}", path.display())))?;
    }
    let text = if as_coeffs { p.to_coeff_list() } else { p.to_human() };
    let coeffs: Vec<String> = p.coeffs().iter().map(ToString::to_string).collect();
    Ok(Report::new(text, json!({ "n": n, "degree": degree, "poly": p.to_human(), "coeffs": coeffs })))
}

fn coeff(n: u64, k: usize, method: Method) -> Result<Report> {
    let (name, v): (&str, BigInt) = match method {
        Method::Direct => ("direct", coeff_direct(n, k)),
        Method::Moller => ("moller", coeff_moller(n, k)),
        Method::Recurrence => ("recurrence", coeff_prefix_recurrence(n, k)?.swap_remove(k)),
        Method::Bell => ("bell", coeff_bell(n, k)?),
        Method::Taylor1 => ("taylor1", coeff_taylor_from_one(n, k)?),
        Method::All => ("all", coeff_all(n, k)?),
    };
    let text = if method == Method::All { format!("{v} (all methods agree)") } else { v.to_string() };
    Ok(Report::new(text, json!({ "n": n, "k": k, "method": name, "value": v.to_string() })))
}

fn parse_rationals(list: &str) -> Result<Vec<BigRational>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for token in list.split(',') {
        let value = rational::parse(token).map_err(|e| match e {
            Error::Parse { pos, msg } => Error::Parse { pos: offset + pos, msg },
            other => other,
        })?;
        out.push(value);
        offset += token.len() + 1;
    }
    Ok(out)
}

fn bellpoly(which: BellCommand) -> Result<Report> {
    let (label, value) = match which {
        BellCommand::Partial { k, j, args } => (format!("B_{{{k},{j}}}"), bell_partial(k, j, &parse_rationals(&args)?)?),
        BellCommand::Complete { k, args } => (format!("B_{k}"), bell_complete(k, &parse_rationals(&args)?)?),
    };
    Ok(Report::new(q(&value), json!({ "polynomial": label, "value": q(&value) })))
}

fn logderiv(args: LogderivArgs) -> Result<Report> {
    let x = rational::parse(&args.at)?;
    let order = args.order;
    if order == 0 {
        return Err(Error::Domain("--order must be at least 1".into()));
    }
    let at = |v: i64| x == int(v);
    let (label, f, closed): (String, IntPoly, Option<Vec<BigRational>>) = match &args.target {
        LogderivTarget::Phi { n } => {
            let n = *n;
            let rule: Option<fn(u64, usize) -> Result<BigRational>> = if at(0) {
                Some(log_deriv_phi_at_zero)
            } else if at(1) {
                Some(log_deriv_phi_at_one)
            } else if at(-1) {
                Some(log_deriv_phi_at_minus_one)
            } else {
                None
            };
            let closed = rule.map(|r| (1..=order).map(|k| r(n, k)).collect::<Result<Vec<_>>>()).transpose()?;
            (format!("Φ_{n}"), (*cyclotomic(n.max(1))).clone(), closed)
        }
        LogderivTarget::Invphi { n } => {
            let n = *n;
            let rule: Option<fn(u64, usize) -> Result<BigRational>> = if at(0) {
                Some(log_deriv_inverse_cyclo_at_zero)
            } else if at(-1) {
                Some(log_deriv_inverse_cyclo_at_minus_one)
            } else {
                None
            };
            let closed = rule.map(|r| (1..=order).map(|k| r(n, k)).collect::<Result<Vec<_>>>()).transpose()?;
            (format!("Ψ_{n}"), inverse_cyclotomic(n.max(1)), closed)
        }
        LogderivTarget::Poly { poly } => {
            let f = IntPoly::parse(poly)?;
            (f.to_human(), f, None)
        }
    };
    let method = if closed.is_some() { "closed_form" } else { "oracle" };
    let values = match closed {
        Some(v) => v,
        None => log_derivatives_oracle(&f, order, &x)?,
    };
    if args.check_oracle {
        let oracle = if method == "oracle" {
            (1..=order).map(|k| log_derivative_symbolic(&f, k, &x)).collect::<Result<Vec<_>>>()?
        } else {
            log_derivatives_oracle(&f, order, &x)?
        };
        if let Some(k) = (0..order).find(|&i| oracle[i] != values[i]) {
            return Err(Error::Invariant(format!(
                "(log {label})^({}) at {}: {method} gives {}, oracle gives {}",
                k + 1,
                q(&x),
                q(&values[k]),
                q(&oracle[k])
            )));
        }
    }
    let mut text = String::new();
    for (i, v) in values.iter().enumerate() {
        writeln!(text, "(log {label})^({}) ({}) = {}", i + 1, q(&x), q(v)).ok();
    }
    Ok(Report::new(
        text,
        json!({
            "function": label,
            "at": q(&x),
            "order": order,
            "method": method,
            "oracle_checked": args.check_oracle,
            "value": q(&values[order - 1]),
            "values": qs(&values),
        }),
    ))
}

fn read_poly(src: &PolySource) -> Result<IntPoly> {
    match (&src.poly, &src.file) {
        (Some(s), _) => IntPoly::parse(s),
        (None, Some(path)) => {
            let s = fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
            IntPoly::parse(s.trim())
        }
        (None, None) => Err(Error::Input("give --poly or --file".into())),
    }
}

fn certificate_text(cert: &Certificate) -> String {
    let mut text = format!("verdict: {}\nreason: {}\n", verdict_name(cert), cert.reason.tag());
    if !cert.witness.is_empty() {
        writeln!(text, "witness: {}", qs(&cert.witness).join(", ")).ok();
    }
    if let Some(fac) = &cert.factorization {
        writeln!(text, "factorization: {fac}").ok();
    }
    text
}

fn verdict_name(cert: &Certificate) -> &'static str {
    if cert.is_kronecker() {
        "kronecker"
    } else {
        "non_kronecker"
    }
}

fn kronecker(action: KroneckerCommand) -> Result<Report> {
    match action {
        KroneckerCommand::Factor(src) => {
            let f = read_poly(&src)?;
            let fac = factor_kronecker(&f)?;
            let kron = fac.is_kronecker();
            let mut json = to_json(&fac)?;
            json["kronecker"] = json!(kron);
            json["display"] = json!(fac.to_string());
            Ok(Report::new(fac.to_string(), json).answer(kron))
        }
        KroneckerCommand::Certify(src) => {
            let f = read_poly(&src)?;
            let cert = certify(&f)?;
            if !cert.verify_against(&f) {
                return Err(Error::Invariant("certificate does not verify against the input".into()));
            }
            Ok(Report::new(certificate_text(&cert), to_json(&cert)?).answer(cert.is_kronecker()))
        }
    }
}

fn parse_gens(gens: &Gens) -> Result<NumericalSemigroup> {
    let mut out = Vec::new();
    let mut offset = 0;
    for token in gens.gens.split(',') {
        let lead = token.len() - token.trim_start().len();
        let t = token.trim();
        let g: u64 = t.parse().map_err(|_| Error::Parse {
            pos: offset + lead,
            msg: format!("expected a positive integer generator, found {t:?}"),
        })?;
        out.push(g);
        offset += token.len() + 1;
    }
    NumericalSemigroup::from_generators(&out)
}

fn semigroup_info(s: &NumericalSemigroup) -> Result<Report> {
    let p = s.semigroup_polynomial();
    let text = format!(
        "semigroup: {s}\ngaps: {:?}\nfrobenius: {}\ngenus: {}\nmultiplicity: {}\nembedding dimension: {}\nsymmetric: {}\npolynomial: {}\n",
        s.gaps(),
        s.frobenius(),
        s.genus(),
        s.multiplicity(),
        s.embedding_dimension(),
        s.is_symmetric(),
        p.to_human()
    );
    let json = json!({
        "generators": s.minimal_generators(),
        "gaps": s.gaps(),
        "frobenius": s.frobenius(),
        "genus": s.genus(),
        "multiplicity": s.multiplicity(),
        "embedding_dimension": s.embedding_dimension(),
        "conductor": s.conductor(),
        "apery": s.apery(),
        "symmetric": s.is_symmetric(),
        "polynomial": p.to_human(),
    });
    Ok(Report::new(text, json))
}

fn semigroup(action: SemigroupCommand) -> Result<Report> {
    match action {
        SemigroupCommand::Info(g) => semigroup_info(&parse_gens(&g)?),
        SemigroupCommand::Symmetric(g) => {
            let s = parse_gens(&g)?;
            let sym = s.is_symmetric();
            Ok(Report::new(sym.to_string(), json!({ "semigroup": s.to_string(), "symmetric": sym })).answer(sym))
        }
        SemigroupCommand::Cyclotomic(g) => {
            let s = parse_gens(&g)?;
            let cert = s.is_cyclotomic()?;
            let mut json = to_json(&cert)?;
            json["semigroup"] = json!(s.to_string());
            Ok(Report::new(certificate_text(&cert), json).answer(cert.is_kronecker()))
        }
        SemigroupCommand::Polynomial(g) => {
            let p = parse_gens(&g)?.semigroup_polynomial();
            Ok(Report::new(p.to_human(), json!({ "polynomial": p.to_human(), "coeffs": p.to_coeff_list() })))
        }
    }
}

fn sweep_text(rows: &[SweepRow]) -> String {
    let mut text = String::from("k\tF_k\tgcd\tverdict\tfactorization\n");
    for r in rows {
        let verdict = if r.verdict == cyclokit::kronecker::Verdict::Kronecker { "kronecker" } else { "non_kronecker" };
        writeln!(text, "{}\t{}\t{}\t{verdict}\t{}", r.k, q(&r.f_k), r.gcd_pattern, r.factorization).ok();
    }
    text
}

fn fk_command(action: FkCommand) -> Result<Report> {
    match action {
        FkCommand::Gcd { k } => {
            let p = fk_gcd_pattern(k)?;
            let mut json = to_json(&p)?;
            json["k"] = json!(k);
            json["gcd"] = json!(p.to_string());
            Ok(Report::new(p.to_string(), json))
        }
        FkCommand::Certify { k } => {
            let f = fk(k)?;
            let cert = certify(&f)?;
            Ok(Report::new(certificate_text(&cert), to_json(&cert)?).answer(cert.is_kronecker()))
        }
        FkCommand::Sweep { max } => {
            let rows = fk_theorem_sweep(max)?;
            Ok(Report::new(sweep_text(&rows), to_json(&rows)?))
        }
    }
}

fn tables(which: TableCommand) -> Result<Report> {
    match which {
        TableCommand::C { max } => {
            let rows = (1..=max).map(CTable::new).collect::<Result<Vec<_>>>()?;
            let mut text = String::new();
            for r in &rows {
                writeln!(text, "{}: {}", r.k, qs(&r.entries).join(", ")).ok();
            }
            Ok(Report::new(text, to_json(&rows)?))
        }
        TableCommand::Factorization { max } => {
            let rows = fk_theorem_sweep(max)?;
            Ok(Report::new(sweep_text(&rows), to_json(&rows)?))
        }
    }
}

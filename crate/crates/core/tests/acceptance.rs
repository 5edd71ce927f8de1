//! Acceptance gate: one pass/fail line per criterion, non-zero exit if any
//! criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use quatstar::expr::{evaluate, parse_expression, EngineBackend, Expr, Func, OracleBackend};
use quatstar::oracle::sample::{self, PolyShape};
use quatstar::oracle::{bracket_oracle, star_oracle};
use quatstar::verify::{catalog, run_all, Check, Status};
use quatstar::{
    associator, poisson_bracket, star, BracketPair, Error, QPoly, Quat, Rational, Scalar,
    StarConfig, Var,
};

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn whitelist() -> Vec<String> {
    let mut ids: Vec<String> = (1..=14).map(|n| format!("V0.{n}")).collect();
    for p in BracketPair::ALL {
        ids.push(format!("V5.qq_{p}"));
        ids.push(format!("V5.qbarqbar_{p}"));
    }
    for p in ["ab", "ac", "ad"] {
        ids.push(format!("V5.qqbar_{p}"));
        ids.push(format!("V5.qbarq_{p}"));
    }
    ids.extend(["V7.ab.17", "V7.ab.1", "V7.ac.1", "V7.ad.1", "V8.1", "V8.4"].map(String::from));
    ids
}

fn criterion_1() -> Verdict {
    let report = run_all().map_err(|e| e.to_string())?;
    let ids = whitelist();
    let mut failed = Vec::new();
    for id in &ids {
        match report.record(id) {
            Some(r) if r.status == Status::Match => {}
            Some(r) => failed.push(format!(
                "{id} is {} (engine: {})",
                r.status.label(),
                r.engine_value
            )),
            None => failed.push(format!("{id} missing")),
        }
    }
    let expected_values = [
        ("qq", ["0", "0", "0", "2 k", "-2 j", "2 i"]),
        ("qbarqbar", ["0", "0", "0", "2 k", "-2 j", "2 i"]),
    ];
    for (ops, values) in expected_values {
        for (p, v) in BracketPair::ALL.iter().zip(values) {
            let id = format!("V5.{ops}_{p}");
            let got = &report.record(&id).unwrap().engine_value;
            if got != v {
                failed.push(format!("{id} engine value {got}, expected {v}"));
            }
        }
    }
    for (p, qqbar, qbarq) in [
        ("ab", "-2 i", "2 i"),
        ("ac", "-2 j", "2 j"),
        ("ad", "-2 k", "2 k"),
    ] {
        for (ops, v) in [("qqbar", qqbar), ("qbarq", qbarq)] {
            let id = format!("V5.{ops}_{p}");
            let got = &report.record(&id).unwrap().engine_value;
            if got != v {
                failed.push(format!("{id} engine value {got}, expected {v}"));
            }
        }
    }
    if failed.is_empty() {
        Ok(format!("{} whitelisted records MATCH", ids.len()))
    } else {
        Err(failed.join("; "))
    }
}

fn criterion_2() -> Verdict {
    let out = Command::new(env!("CARGO_BIN_EXE_quatstar"))
        .args(["verify", "--format", "json"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.code() == Some(0), || {
        format!("verify exited {:?}", out.status.code())
    })?;
    let report =
        quatstar::verify::DiscrepancyReport::from_json(&String::from_utf8_lossy(&out.stdout))
            .map_err(|e| e.to_string())?;

    let encoded: Vec<String> = {
        let mut ids: Vec<String> = catalog().into_iter().map(|i| i.id).collect();
        ids.sort_by(|a, b| quatstar::verify::compare_ids(a, b));
        ids
    };
    let reported: Vec<String> = report.records.iter().map(|r| r.id.clone()).collect();
    ensure(encoded == reported, || {
        "report does not cover the encoded set exactly once".into()
    })?;

    let cfg = StarConfig::formal();
    for identity in catalog() {
        if let Check::Equal { lhs, .. } | Check::NotEqual { lhs, .. } = &identity.check {
            let e = parse_expression(lhs).map_err(|e| e.to_string())?;
            let oracle = evaluate(&e, &cfg, &OracleBackend).map_err(|e| e.to_string())?;
            let r = report.record(&identity.id).unwrap();
            ensure(r.engine_value == oracle.to_string(), || {
                format!(
                    "{}: engine {} vs oracle {oracle}",
                    identity.id, r.engine_value
                )
            })?;
        }
    }

    let mismatches: Vec<_> = report
        .records
        .iter()
        .filter(|r| r.status == Status::Mismatch)
        .collect();
    let must_mismatch = [
        "V1.product",
        "V5.qqbar_bc",
        "V5.qqbar_bd",
        "V5.qqbar_cd",
        "V5.qbarq_bc",
        "V5.qbarq_bd",
        "V5.qbarq_cd",
    ];
    for id in must_mismatch {
        let r = report.record(id).unwrap();
        ensure(r.status == Status::Mismatch && r.witness.is_some(), || {
            format!("{id} should be a witnessed MISMATCH")
        })?;
    }
    for prefix in ["V9.", "V10.", "V11."] {
        ensure(
            report.records.iter().any(|r| r.id.starts_with(prefix)),
            || format!("no records under {prefix}"),
        )?;
    }
    Ok(format!(
        "{} records, {} MATCH, {} MISMATCH, {} NOT_COMPARABLE",
        report.records.len(),
        report.summary.matched,
        mismatches.len(),
        report.summary.not_comparable
    ))
}

fn criterion_3() -> Verdict {
    let mut r = rng(3);
    let cfg = StarConfig::formal();
    let n = 200;
    for t in 0..n {
        let f: QPoly = sample::polynomial(&mut r, PolyShape::new(4));
        let g: QPoly = sample::polynomial(&mut r, PolyShape::new(4));
        let (engine, oracle) = (star(&f, &g, &cfg), star_oracle(&f, &g, &cfg));
        ensure(engine == oracle, || format!("pair {t}: f = {f}, g = {g}"))?;
    }
    Ok(format!("{n} pairs, position degree <= 4, exact agreement"))
}

fn criterion_4() -> Verdict {
    let mut r = rng(4);
    let cfg = StarConfig::formal();
    let n = 100;
    for t in 0..n {
        let f: QPoly = sample::polynomial(&mut r, PolyShape::new(4));
        let g: QPoly = sample::polynomial(&mut r, PolyShape::new(4));
        let fg = star(&f, &g, &cfg);
        ensure(fg.nu_coefficient(0) == &f * &g, || {
            format!("pair {t}: nu^0 differs from f g")
        })?;
        let half = Rational::ratio(1, 2);
        let first = BracketPair::ALL
            .into_iter()
            .fold(QPoly::zero(), |acc, p| {
                &acc + &(&QPoly::var(p.theta()) * &bracket_oracle(&f, &g, p))
            })
            .scale(&half);
        ensure(fg.nu_coefficient(1) == first, || {
            format!("pair {t}: nu^1 differs from the bracket sum")
        })?;
    }
    Ok(format!("{n} pairs, nu^0 and nu^1 coefficients exact"))
}

fn criterion_5() -> Verdict {
    let mut r = rng(5);
    let cfg = StarConfig::formal();
    let n = 100;
    for t in 0..n {
        let shape = PolyShape::new(3).real();
        let f: QPoly = sample::polynomial(&mut r, shape);
        let g: QPoly = sample::polynomial(&mut r, shape);
        let h: QPoly = sample::polynomial(&mut r, shape);
        ensure(associator(&f, &g, &h, &cfg).is_zero(), || {
            format!("triple {t}: nonzero associator")
        })?;
        for p in BracketPair::ALL {
            ensure(
                poisson_bracket(&f, &g, p) == -poisson_bracket(&g, &f, p),
                || format!("triple {t}: bracket {p} not antisymmetric"),
            )?;
        }
    }
    Ok(format!(
        "{n} real-coefficient triples, associator 0 and brackets antisymmetric"
    ))
}

fn criterion_6() -> Verdict {
    let mut r = rng(6);
    let n = 100;
    for t in 0..n {
        let [x, y, z]: [Quat; 3] = std::array::from_fn(|_| sample::quaternion(&mut r));
        ensure(&(&x * &y) * &z == &x * &(&y * &z), || {
            format!("instance {t}: quaternion associativity")
        })?;
        ensure((&x * &y).norm_sq() == x.norm_sq() * y.norm_sq(), || {
            format!("instance {t}: norm")
        })?;
        ensure((&x * &y).conj() == &y.conj() * &x.conj(), || {
            format!("instance {t}: conjugation")
        })?;
        let w: Quat = sample::nonzero_quaternion(&mut r);
        let inv = w.inverse().map_err(|e| e.to_string())?;
        ensure(
            &w * &inv == Quat::one()
                && &inv * &w == Quat::one()
                && inv == w.conj().scale(&(Rational::from_int(1) / w.norm_sq())),
            || format!("instance {t}: inverse law"),
        )?;

        let shape = PolyShape::new(3);
        let [f, g, h]: [QPoly; 3] =
            std::array::from_fn(|_| sample::polynomial_with_parameters(&mut r, shape));
        ensure(&(&f * &g) * &h == &f * &(&g * &h), || {
            format!("instance {t}: polynomial associativity")
        })?;
        ensure(&f * &(&g + &h) == &(&f * &g) + &(&f * &h), || {
            format!("instance {t}: left distributivity")
        })?;
        ensure(&(&f + &g) * &h == &(&f * &h) + &(&g * &h), || {
            format!("instance {t}: right distributivity")
        })?;
        ensure(&f + &g == &g + &f && (&f + &(-&f)).is_zero(), || {
            format!("instance {t}: additive group")
        })?;
        for u in Var::POSITION {
            let d = |p: &QPoly, v: Var| p.partial(v).unwrap();
            ensure(
                d(&(&f * &g), u) == &(&d(&f, u) * &g) + &(&f * &d(&g, u)),
                || format!("instance {t}: Leibniz rule in {u}"),
            )?;
            for v in Var::POSITION {
                ensure(d(&d(&f, u), v) == d(&d(&f, v), u), || {
                    format!("instance {t}: mixed partials {u}{v}")
                })?;
            }
        }
    }
    Ok(format!("{n} instances of each law"))
}

fn criterion_7() -> Verdict {
    let mut r = rng(7);
    let cfg = StarConfig::formal();
    let mut slowest = Duration::ZERO;
    for t in 0..5 {
        let f: QPoly = sample::polynomial(&mut r, PolyShape::new(6).exact());
        let g: QPoly = sample::polynomial(&mut r, PolyShape::new(6).exact());
        let start = Instant::now();
        let fg = star(&f, &g, &cfg);
        let elapsed = start.elapsed();
        slowest = slowest.max(elapsed);
        ensure(elapsed < Duration::from_secs(1), || {
            format!("pair {t} took {elapsed:?}")
        })?;
        ensure(fg.degree_in(Var::Nu) <= 6, || {
            format!("pair {t}: nu-degree {}", fg.degree_in(Var::Nu))
        })?;
    }
    Ok(format!("5 degree-6 pairs, slowest {slowest:.0?}"))
}

fn random_expr(r: &mut ChaCha8Rng, depth: u32) -> Expr {
    use rand::Rng;
    let leaf = |r: &mut ChaCha8Rng| match r.gen_range(0..5) {
        0 => Expr::Num(Rational::ratio(r.gen_range(0..=9), r.gen_range(1..=4))),
        1 => Expr::Unit(r.gen_range(1..=3)),
        2 => Expr::Q,
        3 => Expr::QBar,
        _ => Expr::Var(Var::ALL[r.gen_range(0..Var::ALL.len())]),
    };
    if depth == 0 {
        return leaf(r);
    }
    let sub = |r: &mut ChaCha8Rng| Box::new(random_expr(r, depth - 1));
    match r.gen_range(0..10) {
        0 => leaf(r),
        1 => Expr::Neg(sub(r)),
        2 => Expr::Add(sub(r), sub(r)),
        3 => Expr::Sub(sub(r), sub(r)),
        4 => Expr::Mul(sub(r), sub(r)),
        5 => Expr::Pow(sub(r), r.gen_range(0..=2)),
        6 => Expr::Call(Func::Star, vec![*sub(r), *sub(r)]),
        7 => Expr::Call(
            Func::Bracket(BracketPair::ALL[r.gen_range(0..6)]),
            vec![*sub(r), *sub(r)],
        ),
        8 => Expr::Call(Func::Conj, vec![*sub(r)]),
        _ => Expr::Call(Func::Comm, vec![*sub(r), *sub(r)]),
    }
}

fn run_cli(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_quatstar"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn check_schema(v: &Value) -> Result<(), String> {
    let obj = v.as_object().ok_or("report is not an object")?;
    let keys: Vec<&str> = obj.keys().map(String::as_str).collect();
    ensure(keys == ["engine_version", "summary", "records"], || {
        format!("top-level keys {keys:?}")
    })?;
    ensure(obj["engine_version"].is_string(), || {
        "engine_version is not a string".into()
    })?;
    let summary = obj["summary"]
        .as_object()
        .ok_or("summary is not an object")?;
    let skeys: Vec<&str> = summary.keys().map(String::as_str).collect();
    ensure(skeys == ["match", "mismatch", "not_comparable"], || {
        format!("summary keys {skeys:?}")
    })?;
    ensure(summary.values().all(|x| x.is_u64()), || {
        "summary counts are not integers".into()
    })?;
    let records = obj["records"].as_array().ok_or("records is not an array")?;
    let mut counts = [0u64; 3];
    for rec in records {
        let rec = rec.as_object().ok_or("record is not an object")?;
        let rkeys: Vec<&str> = rec.keys().map(String::as_str).collect();
        let required = [
            "id",
            "paper_location",
            "claim_text",
            "engine_value",
            "status",
        ];
        ensure(rkeys[..5] == required && rkeys.len() <= 6, || {
            format!("record keys {rkeys:?}")
        })?;
        if rkeys.len() == 6 {
            ensure(rkeys[5] == "witness" && rec["witness"].is_string(), || {
                "bad witness".into()
            })?;
        }
        ensure(required.iter().all(|k| rec[*k].is_string()), || {
            "non-string record field".into()
        })?;
        match rec["status"].as_str().unwrap() {
            "MATCH" => counts[0] += 1,
            "MISMATCH" => counts[1] += 1,
            "NOT_COMPARABLE" => counts[2] += 1,
            s => return Err(format!("unknown status {s}")),
        }
    }
    let declared = [
        summary["match"].as_u64(),
        summary["mismatch"].as_u64(),
        summary["not_comparable"].as_u64(),
    ];
    ensure(declared == counts.map(Some), || {
        "summary counts disagree with records".into()
    })
}

fn criterion_8() -> Verdict {
    let mut r = rng(8);
    let cfg = StarConfig::formal();
    let n = 100;
    for t in 0..n {
        let e = random_expr(&mut r, 3);
        let text = e.to_string();
        let back = parse_expression(&text).map_err(|err| format!("expr {t} `{text}`: {err}"))?;
        ensure(back == e, || {
            format!("expr {t}: `{text}` parsed to a different tree")
        })?;
        let value = evaluate(&e, &cfg, &EngineBackend).map_err(|err| format!("expr {t}: {err}"))?;
        let printed = value.to_string();
        let reparsed =
            parse_expression(&printed).map_err(|err| format!("expr {t} value: {err}"))?;
        let revalued = evaluate(&reparsed, &cfg, &EngineBackend).map_err(|err| err.to_string())?;
        ensure(revalued == value, || {
            format!("expr {t}: value `{printed}` does not round trip")
        })?;
    }

    let cases: [(&[&str], i32); 6] = [
        (&["eval", "star(q,q)"], 0),
        (&["eval", "q +* q"], 2),
        (&["eval", "star(q)"], 2),
        (&["eval", "inv(0)"], 3),
        (&["verify", "--id", "bogus"], 2),
        (&["fuzz", "--trials", "3"], 0),
    ];
    for (args, code) in cases {
        let got = run_cli(args).status.code();
        ensure(got == Some(code), || {
            format!("{args:?} exited {got:?}, expected {code}")
        })?;
    }
    let divergence = Error::Divergence {
        context: String::new(),
        engine: String::new(),
        oracle: String::new(),
    };
    ensure(divergence.exit_code() == 4, || {
        "divergence does not map to exit 4".into()
    })?;

    let out = run_cli(&["verify", "--format", "json"]);
    let v: Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    check_schema(&v)?;
    Ok(format!(
        "{n} expressions round trip, exit codes as specified, JSON schema valid"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("verified-match whitelist", criterion_1),
        ("discrepancy documentation", criterion_2),
        ("oracle equivalence", criterion_3),
        ("deformation structure", criterion_4),
        ("classical limit", criterion_5),
        ("algebraic law suite", criterion_6),
        ("termination and performance", criterion_7),
        ("command line", criterion_8),
    ];
    let mut failures = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail})", n + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {} {name}: FAIL ({detail})", n + 1);
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failures} of {} criteria failed", criteria.len());
        ExitCode::FAILURE
    }
}

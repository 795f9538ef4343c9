use super::report::{Cell, Check, Report, Table};
use super::Command;
use crate::dt::{
    build_a, classical_dt, dt_invariants, dt_theta, hn_factorization, reconstruct_a, stable_counts,
};
use crate::error::{Error, Result};
use crate::kac::{hua_series, kac_polynomials, refined_invariants, refined_series, refined_to_kac};
use crate::oracle::{Oracle, MAX_TOTAL_DIM};
use crate::qalg::{LaurentPoly, Rat};
use crate::quiver::{Quiver, Slope, Stability};
use crate::series::{
    plethystic_exp, plethystic_log, scale_by_q_minus_1, specialize_levels, DimVector, Grading, QScaling,
};

pub(super) struct Job {
    pub quiver: Quiver,
    pub bound: u32,
    pub levels: usize,
    pub theta: Option<Stability>,
    pub prime: Option<u64>,
}

impl Job {
    fn report(&self, command: &str) -> Report {
        Report {
            command: command.into(),
            arrow_matrix: self.quiver.arrows().to_vec(),
            max_degree: self.bound,
            tables: Vec::new(),
            checks: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn theta(&self) -> Stability {
        self.theta.clone().unwrap_or_else(|| Stability::zero(self.quiver.vertices()))
    }
}

pub(super) fn execute(command: Command, job: &Job) -> Result<Report> {
    match command {
        Command::Dt => dt(job),
        Command::Kac => kac(job),
        Command::Refined => refined(job),
        Command::Hn => hn(job),
        Command::Stable => stable(job),
        Command::Oracle => oracle(job),
        Command::Selftest => selftest(job),
    }
}

fn alpha_cell(a: &DimVector) -> Cell {
    Cell::Text(a.to_string())
}

fn failures<I: IntoIterator<Item = (String, String)>>(items: I) -> String {
    items
        .into_iter()
        .map(|(k, v)| format!("{k}: {v}"))
        .collect::<Vec<_>>()
        .join("; ")
}

fn dt(job: &Job) -> Result<Report> {
    let mut report = job.report("dt");
    let r = dt_invariants(&job.quiver, job.bound)?;
    let classical = classical_dt(&r)?;
    let mut t = Table::new(
        "DT invariants",
        &["alpha", "Omega(q^(1/2))", "Omega(-q^(1/2))", "positive", "integral", "no_negative_powers", "classical"],
    );
    for (a, e) in &r.entries {
        t.push(vec![
            alpha_cell(a),
            Cell::laurent(&e.omega),
            Cell::laurent(&e.omega_neg),
            Cell::Flag(e.positive),
            Cell::Flag(e.integral),
            Cell::Flag(e.no_negative_powers),
            Cell::Rational(classical[a].clone()),
        ]);
    }
    report.tables.push(t);
    let bad = |f: fn(&crate::dt::DtEntry) -> bool| {
        failures(r.entries.iter().filter(|(_, e)| !f(e)).map(|(a, e)| (a.to_string(), e.omega_neg.to_string())))
    };
    report.checks.push(Check::asserted(
        "Omega(-q^(1/2)) has nonnegative integer coefficients",
        r.all_positive(),
        bad(|e| e.positive),
    ));
    report.checks.push(Check::asserted("Omega integral", r.all_integral(), bad(|e| e.integral)));
    report.checks.push(Check::reported(
        "no negative powers in Omega(-q^(1/2))",
        r.no_negative_powers(),
        bad(|e| e.no_negative_powers),
    ));
    Ok(report)
}

fn kac(job: &Job) -> Result<Report> {
    let mut report = job.report("kac");
    let k = kac_polynomials(&job.quiver, job.bound)?;
    let mut t = Table::new("Kac polynomials", &["alpha", "a_alpha", "in_N[q]"]);
    for (a, e) in &k.entries {
        t.push(vec![alpha_cell(a), Cell::laurent(&e.a_alpha), Cell::Flag(e.in_n_of_q)]);
    }
    report.tables.push(t);
    let detail = failures(
        k.entries
            .iter()
            .filter(|(_, e)| !e.in_n_of_q)
            .map(|(a, e)| (a.to_string(), e.a_alpha.to_string())),
    );
    let name = "a_alpha in N[q]";
    report.checks.push(if job.quiver.has_enough_loops() {
        Check::asserted(name, k.all_in_n_of_q(), detail)
    } else {
        Check::reported(name, k.all_in_n_of_q(), detail)
    });
    Ok(report)
}

fn refined(job: &Job) -> Result<Report> {
    let mut report = job.report("refined");
    let r = refined_invariants(&job.quiver, job.levels, job.bound)?;
    let mut t = Table::new("refined invariants", &["gamma", "b_gamma", "laurent_in_q", "positive"]);
    for (g, e) in &r.entries {
        t.push(vec![
            Cell::Text(r.gamma_label(g)),
            Cell::Poly(e.b_gamma.clone()),
            Cell::Flag(e.laurent_in_q),
            Cell::Flag(e.positive),
        ]);
    }
    report.tables.push(t);
    let detail = failures(
        r.violations()
            .into_iter()
            .map(|g| (r.gamma_label(g), r.b(g).to_string())),
    );
    let name = "b_gamma in N[q]";
    if r.theorem_applies {
        report.checks.push(Check::asserted(name, r.all_positive(), detail));
    } else {
        report.checks.push(Check::reported(name, r.all_positive(), detail));
        report.notes.push("some vertex has no loop, so positivity is only reported".into());
    }
    if job.levels >= job.bound as usize {
        let collapsed = refined_to_kac(&r, job.bound)?;
        let direct = kac_polynomials(&job.quiver, job.bound)?;
        report.checks.push(Check::asserted(
            "collapsed refined invariants equal the Kac polynomials",
            collapsed == direct,
            "",
        ));
    } else {
        report
            .notes
            .push(format!("{} levels < max degree {}: Kac comparison skipped", job.levels, job.bound));
    }
    Ok(report)
}

fn hn(job: &Job) -> Result<Report> {
    let mut report = job.report("hn");
    let theta = job.theta();
    let strata = hn_factorization(&job.quiver, &theta, job.bound)?;
    let mut t = Table::new("semistable strata", &["slope", "alpha", "A_theta"]);
    for s in &strata {
        for (a, c) in s.series.iter().filter(|(a, _)| !a.is_zero()) {
            t.push(vec![Cell::Rational(s.slope.0.clone()), alpha_cell(a), Cell::Poly(c.clone())]);
        }
    }
    report.tables.push(t);
    let a = build_a(&job.quiver, job.bound)?;
    report.checks.push(Check::asserted(
        "ordered product of strata reproduces A",
        reconstruct_a(&strata)? == a,
        "",
    ));
    match dt_theta(&job.quiver, &theta, job.bound) {
        Ok(strata) => {
            let mut t = Table::new(
                "theta-DT invariants",
                &["slope", "alpha", "Omega_theta(q^(1/2))", "Omega_theta(-q^(1/2))", "in_N[q^(1/2)]"],
            );
            let mut bad = Vec::new();
            for s in &strata {
                for (a, c) in &s.omega {
                    let neg = s.omega_neg(a);
                    let positive = neg.as_ref().is_some_and(LaurentPoly::is_in_n_of_v);
                    if !positive {
                        bad.push((a.to_string(), c.substitute_neg_v().to_string()));
                    }
                    t.push(vec![
                        Cell::Rational(s.slope.0.clone()),
                        alpha_cell(a),
                        Cell::Poly(c.clone()),
                        Cell::Poly(c.substitute_neg_v()),
                        Cell::Flag(positive),
                    ]);
                }
            }
            report.tables.push(t);
            report.checks.push(Check::reported(
                "Omega_theta(-q^(1/2)) in N[q^(1/2)]",
                bad.is_empty(),
                failures(bad),
            ));
        }
        Err(e @ Error::StratumNotCommutative { .. }) => {
            report.notes.push(format!("theta-DT invariants undefined: {e}"));
        }
        Err(e) => return Err(e),
    }
    Ok(report)
}

fn stable(job: &Job) -> Result<Report> {
    let mut report = job.report("stable");
    let theta = job.theta();
    let strata = hn_factorization(&job.quiver, &theta, job.bound)?;
    let mut t = Table::new("absolutely stable counts", &["slope", "alpha", "S_alpha"]);
    for s in &strata {
        for (a, p) in stable_counts(&job.quiver, &theta, &s.slope, job.bound)? {
            t.push(vec![Cell::Rational(s.slope.0.clone()), alpha_cell(&a), Cell::laurent(&p)]);
        }
    }
    report.tables.push(t);
    Ok(report)
}

/// Oracle comparisons for every `a` with `0 < |a| <= limit`, skipping those
/// past the point cap.
fn oracle_checks(job: &Job, p: u64, limit: u32, report: &mut Report) -> Result<()> {
    let oracle = Oracle::default();
    let q = &job.quiver;
    let kac = kac_polynomials(q, limit)?;
    let zero = Slope(Rat::from_integer(0.into()));
    let stable = stable_counts(q, &Stability::zero(q.vertices()), &zero, limit)?;
    let at_p = |f: Option<&LaurentPoly>| -> Result<Rat> {
        f.map_or(Ok(Rat::from_integer(0.into())), |f| f.eval_at_q(&Rat::from_integer(p.into())))
    };
    let mut t = Table::new(
        &format!("oracle over F_{p}"),
        &["alpha", "classes", "count_kac", "a_alpha(p)", "count_simple", "S_alpha(p)", "burnside"],
    );
    let mut bad = Vec::new();
    for alpha in Grading::uniform(q.vertices(), limit)?.monomials().iter().skip(1) {
        let classes = match oracle.enumerate_classes(q, alpha, p) {
            Ok(c) => c,
            Err(Error::CapExceeded { required, .. }) => {
                report.notes.push(format!("{alpha}: {required} points exceed the cap, skipped"));
                continue;
            }
            Err(e) => return Err(e),
        };
        let n_kac = classes.iter().filter(|c| c.absolutely_indecomposable).count() as i64;
        let n_simple = classes.iter().filter(|c| c.absolutely_simple).count() as i64;
        let a_p = at_p(kac.entries.get(alpha).map(|e| &e.a_alpha))?;
        let s_p = at_p(stable.get(alpha))?;
        let burnside = oracle.burnside_report(q, alpha, p, &classes)?.holds();
        if Rat::from_integer(n_kac.into()) != a_p {
            bad.push((format!("{alpha} absolutely indecomposable"), format!("{n_kac} vs {a_p}")));
        }
        if Rat::from_integer(n_simple.into()) != s_p {
            bad.push((format!("{alpha} absolutely simple"), format!("{n_simple} vs {s_p}")));
        }
        if !burnside {
            bad.push((format!("{alpha} burnside"), "mismatch".into()));
        }
        t.push(vec![
            alpha_cell(alpha),
            Cell::Int(classes.len() as i64),
            Cell::Int(n_kac),
            Cell::Rational(a_p),
            Cell::Int(n_simple),
            Cell::Rational(s_p),
            Cell::Flag(burnside),
        ]);
    }
    report.tables.push(t);
    report.checks.push(Check::asserted(
        &format!("oracle counts over F_{p} match a_alpha, S_alpha and the class sum"),
        bad.is_empty(),
        failures(bad),
    ));
    Ok(())
}

fn oracle(job: &Job) -> Result<Report> {
    let p = job
        .prime
        .ok_or_else(|| Error::Invalid("the oracle command needs --prime".into()))?;
    let mut report = job.report("oracle");
    oracle_checks(job, p, job.bound.min(MAX_TOTAL_DIM as u32), &mut report)?;
    Ok(report)
}

fn selftest(job: &Job) -> Result<Report> {
    let mut report = job.report("selftest");
    let q = &job.quiver;
    let bound = job.bound;
    let a = build_a(q, bound)?;
    let plain = a.clone().without_twist();
    report.checks.push(Check::asserted(
        "Exp(Log(A)) = A",
        plethystic_exp(&plethystic_log(&plain)?)? == plain,
        "",
    ));
    if q.is_symmetric() {
        let r = dt_invariants(q, bound)?;
        let back = plethystic_exp(&scale_by_q_minus_1(&r.omega_series()?, QScaling::Divide))?;
        report.checks.push(Check::asserted("Exp(Omega / (q - 1)) = A", back == plain, ""));
        report.checks.push(Check::asserted("Omega(-q^(1/2)) positive", r.all_positive(), ""));
        report.checks.push(Check::asserted("Omega integral", r.all_integral(), ""));
        report.checks.push(Check::asserted(
            "twisted product equals plain product",
            a.twisted_mul(&a)?.without_twist() == plain.mul(&plain)?,
            "",
        ));
    } else {
        report.notes.push("quiver is not symmetric: DT checks skipped".into());
    }
    let theta = job.theta.clone().unwrap_or_else(|| {
        let mut t = vec![0; q.vertices()];
        t[0] = 1;
        Stability::from_ints(&t)
    });
    let strata = hn_factorization(q, &theta, bound)?;
    report.checks.push(Check::asserted(
        "ordered product of strata reproduces A",
        reconstruct_a(&strata)? == a,
        "",
    ));
    let hua = hua_series(q, bound)?;
    let special = specialize_levels(&refined_series(q, bound as usize, bound)?, q.vertices())?;
    report.checks.push(Check::asserted("specialized refined series equals Hua's series", special == hua, ""));
    let refined = refined_invariants(q, bound as usize, bound)?;
    let kac = kac_polynomials(q, bound)?;
    report.checks.push(Check::asserted(
        "collapsed refined invariants equal the Kac polynomials",
        refined_to_kac(&refined, bound)? == kac,
        "",
    ));
    let name = "b_gamma in N[q]";
    report.checks.push(if refined.theorem_applies {
        Check::asserted(name, refined.all_positive(), "")
    } else {
        Check::reported(name, refined.all_positive(), "")
    });
    if let Some(p) = job.prime {
        oracle_checks(job, p, bound.min(3), &mut report)?;
    }
    Ok(report)
}

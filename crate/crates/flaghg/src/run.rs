//! Command dispatch: each command yields an [`Outcome`] that the report
//! layer renders.

use flaghg_core::locus::{
    closed_form_euler_factored, grassmannian_euler_factored, normal_euler_factored, normal_euler_factored_ambient_zero, normal_ledger,
    tangent_ledger, Ledger, Target,
};
use flaghg_core::mirror::{hg_series, hori_vafa_verify, integral_id, localized_integrand, HgTerm, IntegralResult};
use flaghg_core::push::{ab_integrate, component_tower, integrate_tower_at};
use flaghg_core::tableau::{component_dimension, enumerate_tableaux, hquot_dimension, FlagSpec, Tableau};
use flaghg_core::Result;
use serde_json::{json, Value};

use crate::job::{Command, JobSpec};

/// Deterministic output of one command, cached as a unit.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub results: Value,
    pub text: Vec<String>,
    pub routes: Vec<String>,
    pub verified: bool,
}

impl Outcome {
    pub fn to_value(&self) -> Value {
        json!({ "results": self.results, "text": self.text, "routes": self.routes, "verified": self.verified })
    }

    pub fn from_value(v: &Value) -> Option<Outcome> {
        let strings = |k: &str| -> Option<Vec<String>> { v.get(k)?.as_array()?.iter().map(|s| s.as_str().map(String::from)).collect() };
        Some(Outcome {
            results: v.get("results")?.clone(),
            text: strings("text")?,
            routes: strings("routes")?,
            verified: v.get("verified")?.as_bool()?,
        })
    }
}

pub fn rows_text(t: &Tableau) -> String {
    let rows: Vec<String> = t
        .alpha()
        .iter()
        .map(|r| format!("[{}]", r.iter().map(u32::to_string).collect::<Vec<_>>().join(",")))
        .collect();
    rows.join(" / ")
}

fn spec_json(s: &FlagSpec) -> Value {
    json!({ "n": s.n(), "ranks": s.ranks() })
}

fn ledger_lines(l: &Ledger) -> Vec<String> {
    l.counts()
        .iter()
        .map(|((src, tgt, w), c)| {
            let tgt = match tgt {
                Target::Block(b) => format!("({},{})", b.level, b.block),
                Target::Ambient => "ambient".to_string(),
            };
            format!("{:+} Hom(({},{}), {}) w={}", c, src.level, src.block, tgt, w)
        })
        .collect()
}

pub fn execute(job: &JobSpec) -> Result<Outcome> {
    match job.command {
        Command::Tableaux => tableaux(job),
        Command::Euler => euler(job),
        Command::Integral => integral(job),
        Command::Hg => hg(job),
        Command::HoriVafa => hori_vafa(job),
        Command::OracleCompare => oracle_compare(job),
    }
}

fn tableaux(job: &JobSpec) -> Result<Outcome> {
    let ts = enumerate_tableaux(&job.spec);
    let mut entries = Vec::new();
    let mut text = vec![format!("tableaux: {}", ts.len())];
    for t in &ts {
        let dim = component_dimension(t)?;
        let mut e = json!({ "rows": t.alpha(), "dimension": dim });
        text.push(format!("  {}  dim {}", rows_text(t), dim));
        if job.explain {
            let tan = ledger_lines(&tangent_ledger(t));
            let nu = ledger_lines(&normal_ledger(t)?);
            text.push("    tangent ledger:".into());
            text.extend(tan.iter().map(|l| format!("      {}", l)));
            text.push("    normal ledger:".into());
            text.extend(nu.iter().map(|l| format!("      {}", l)));
            e["tangent_ledger"] = json!(tan);
            e["normal_ledger"] = json!(nu);
        }
        entries.push(e);
    }
    let hq = hquot_dimension(&job.spec);
    text.push(format!("hquot dimension: {}", hq));
    Ok(Outcome {
        results: json!({ "spec": spec_json(&job.spec), "degree": job.spec.degrees(), "count": ts.len(), "hquot_dimension": hq, "tableaux": entries }),
        text,
        routes: vec!["enumeration".into()],
        verified: true,
    })
}

fn euler(job: &JobSpec) -> Result<Outcome> {
    let grass = job.spec.levels() == 1;
    let mut entries = Vec::new();
    let mut text = Vec::new();
    let mut all = true;
    for t in enumerate_tableaux(&job.spec) {
        let closed = closed_form_euler_factored(&t)?;
        let ledger = normal_euler_factored(&t)?;
        let mut agree = closed == ledger;
        let mut e = json!({ "rows": t.alpha(), "euler": closed.to_string(), "ledger_agrees": closed == ledger });
        if grass {
            let g = grassmannian_euler_factored(&t)? == normal_euler_factored_ambient_zero(&t)?;
            e["grassmannian_agrees"] = json!(g);
            agree &= g;
        }
        all &= agree;
        text.push(format!("  {}  {}  e(ν) = {}", rows_text(&t), if agree { "agree" } else { "MISMATCH" }, closed));
        if job.explain {
            let nu = ledger_lines(&normal_ledger(&t)?);
            text.extend(nu.iter().map(|l| format!("      {}", l)));
            e["normal_ledger"] = json!(nu);
        }
        entries.push(e);
    }
    text.insert(0, format!("normal Euler classes: {}", if all { "routes agree" } else { "routes DISAGREE" }));
    let mut routes = vec!["closed-form".to_string(), "ledger".to_string()];
    if grass {
        routes.push("grassmannian-product".into());
    }
    Ok(Outcome {
        results: json!({ "spec": spec_json(&job.spec), "degree": job.spec.degrees(), "tableaux": entries, "all_agree": all }),
        text,
        routes,
        verified: all,
    })
}

fn integral_json(res: &IntegralResult, explain: bool) -> Result<Value> {
    let t_poly: Vec<Value> = res
        .t_terms()?
        .into_iter()
        .map(|t| json!({ "t_exp": t.t_exp, "alpha_ratfun": t.alpha.to_string() }))
        .collect();
    let mut per = Vec::new();
    for (t, c) in &res.per_tableau {
        let mut e = json!({ "rows": t.alpha(), "contribution": c.to_string() });
        if explain {
            e["dimension"] = json!(component_dimension(t)?);
            e["normal_ledger"] = json!(ledger_lines(&normal_ledger(t)?));
        }
        per.push(e);
    }
    Ok(json!({
        "spec": spec_json(&res.spec),
        "degree": res.spec.degrees(),
        "t_poly": t_poly,
        "per_tableau": per,
        "display": res.pretty()?,
    }))
}

fn integral(job: &JobSpec) -> Result<Outcome> {
    let res = integral_id(&job.spec, job.lambda_seed)?;
    let mut text = vec![format!("I_d = {}", res.pretty()?)];
    if job.explain {
        for (t, c) in &res.per_tableau {
            text.push(format!("  {}  dim {}  {}", rows_text(t), component_dimension(t)?, c));
            text.extend(ledger_lines(&normal_ledger(t)?).iter().map(|l| format!("      {}", l)));
        }
    }
    Ok(Outcome { results: integral_json(&res, job.explain)?, text, routes: vec!["fixed-point-oracle".into()], verified: true })
}

fn degree_text(d: &[u32]) -> String {
    d.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn hg(job: &JobSpec) -> Result<Outcome> {
    let s = hg_series(job.spec.n(), job.spec.ranks(), job.max_degree, job.lambda_seed, job.coset_budget)?;
    let mut terms = Vec::new();
    let mut text = Vec::new();
    for (d, term) in &s.terms {
        match term {
            HgTerm::Class(c) => {
                text.push(format!("d={}: {}", degree_text(d), c));
                terms.push(json!({ "degree": d, "class": c.to_string() }));
            }
            HgTerm::Integral(res) => {
                text.push(format!("d=({}): {}", degree_text(d), res.pretty()?));
                terms.push(json!({ "degree": d, "integral": integral_json(res, job.explain)? }));
            }
        }
    }
    let routes = if job.spec.levels() == 1 {
        vec!["tableau-sum".into(), "display".into(), "schur-pairing".into()]
    } else {
        vec!["fixed-point-oracle".into()]
    };
    Ok(Outcome {
        results: json!({ "spec": spec_json(&job.spec), "max_degree": s.max_degree, "terms": terms }),
        text,
        routes,
        verified: true,
    })
}

fn hori_vafa(job: &JobSpec) -> Result<Outcome> {
    let rep = hori_vafa_verify(job.spec.n(), job.spec.rank(1), job.max_degree, job.lambda_seed, job.coset_budget)?;
    let passed = rep.passed();
    let mut text = vec![format!("hori-vafa Gr_{}(C^{}) up to d={}: {}", rep.r, rep.n, rep.max_degree, if passed { "pass" } else { "FAIL" })];
    for d in 0..=rep.max_degree {
        let rows: Vec<_> = rep.rows.iter().filter(|r| r.degree == d).collect();
        let zero = rows.iter().filter(|r| r.residual.is_zero()).count();
        let exact = rep.exact_division.get(d as usize).copied().unwrap_or(true);
        text.push(format!("  d={}: {}/{} residuals zero, exact division {}", d, zero, rows.len(), if exact { "yes" } else { "no" }));
        if job.explain {
            for r in rows {
                text.push(format!("    s_{:?}: {}  residual {}", r.partition, r.expected, r.residual));
            }
        }
    }
    let rows: Vec<Value> = rep
        .rows
        .iter()
        .map(|r| {
            json!({
                "degree": r.degree,
                "partition": r.partition,
                "expected": r.expected.to_string(),
                "computed": r.computed.to_string(),
                "residual": r.residual.to_string(),
            })
        })
        .collect();
    Ok(Outcome {
        results: json!({ "n": rep.n, "r": rep.r, "max_degree": rep.max_degree, "exact_division": rep.exact_division, "rows": rows, "passed": passed }),
        text,
        routes: vec!["hori-vafa".into(), "tableau-sum".into(), "display".into()],
        verified: passed,
    })
}

fn oracle_compare(job: &JobSpec) -> Result<Outcome> {
    let mut entries = Vec::new();
    let mut text = Vec::new();
    let mut all = true;
    let seed = job.lambda_seed;
    for t in enumerate_tableaux(&job.spec) {
        let p = localized_integrand(&t)?;
        let tower = integrate_tower_at(&p, &component_tower(&t)?, job.spec.n(), seed, job.coset_budget)?;
        let oracle = ab_integrate(&t, &p, seed)?;
        let reseeded = ab_integrate(&t, &p, seed.wrapping_add(1))?;
        let agree = tower == oracle && oracle == reseeded;
        all &= agree;
        text.push(format!("  {}  {}  {}", rows_text(&t), if agree { "agree" } else { "MISMATCH" }, oracle));
        let mut e = json!({ "rows": t.alpha(), "oracle": oracle.to_string(), "agree": agree });
        if !agree || job.explain {
            e["tower"] = json!(tower.to_string());
            e["oracle_next_seed"] = json!(reseeded.to_string());
        }
        entries.push(e);
    }
    text.insert(0, format!("oracle-compare: {}", if all { "all agree" } else { "MISMATCH" }));
    Ok(Outcome {
        results: json!({ "spec": spec_json(&job.spec), "degree": job.spec.degrees(), "tableaux": entries, "all_agree": all }),
        text,
        routes: vec!["tower".into(), "fixed-point-oracle".into()],
        verified: all,
    })
}

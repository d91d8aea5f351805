//! Report rendering. Everything here is a pure function of the job and the
//! outcome, so reports are byte-identical across runs and cache states.

use serde_json::{json, Value};

use crate::job::{Command, JobSpec};
use crate::run::Outcome;

fn list(xs: impl IntoIterator<Item = impl ToString>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

pub fn provenance(job: &JobSpec, out: &Outcome) -> Value {
    json!({
        "engine_version": flaghg_core::VERSION,
        "lambda_seed": job.lambda_seed,
        "coset_budget": job.coset_budget.to_string(),
        "routes": out.routes,
    })
}

pub fn render_json(job: &JobSpec, out: &Outcome) -> String {
    let v = json!({
        "job": job.echo(),
        "results": out.results,
        "provenance": provenance(job, out),
        "verified": out.verified,
    });
    // serde_json maps are BTreeMaps here, so keys come out sorted
    let mut s = serde_json::to_string_pretty(&v).expect("report serializes");
    s.push('\n');
    s
}

pub fn render_text(job: &JobSpec, out: &Outcome) -> String {
    let s = &job.spec;
    let mut head = format!("n={} ranks=({}) ", s.n(), list(s.ranks()));
    match job.command {
        Command::Hg | Command::HoriVafa => head.push_str(&format!("max-degree={}", job.max_degree)),
        _ => head.push_str(&format!("degrees=({})", list(s.degrees()))),
    }
    let mut lines = vec![
        format!("flaghg {}", job.command.name()),
        format!("job: {} lambda-seed={} coset-budget={}{}", head, job.lambda_seed, job.coset_budget, if job.explain { " explain" } else { "" }),
    ];
    lines.extend(out.text.iter().cloned());
    lines.push(format!("routes: {}", out.routes.join(", ")));
    lines.push(format!("engine: flaghg-core {}", flaghg_core::VERSION));
    let mut text = lines.join("\n");
    text.push('\n');
    text
}

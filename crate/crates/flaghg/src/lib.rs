//! Command-line runner for the flaghg engine: job parsing, a content-addressed
//! cache and deterministic reports.
//!
//! Stdout carries only the report. Cache status, warnings and timings go to
//! stderr, so repeated runs print identical bytes.

pub mod cache;
pub mod job;
pub mod report;
pub mod run;

use std::collections::BTreeMap;
use std::io::Write;
use std::time::Instant;

use cache::{cache_key, Cache, Lookup};
use job::{parse_job, Format, UsageError};
use run::{execute, Outcome};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_COMPUTE: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

/// Runs one invocation and returns the process exit code.
pub fn run_cli(argv: &[String], env: &BTreeMap<String, String>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let job = match parse_job(argv, env) {
        Ok(j) => j,
        Err(UsageError::Display(s)) => {
            let _ = write!(out, "{}", s);
            return EXIT_OK;
        }
        Err(e) => {
            let _ = writeln!(err, "flaghg: {}", e);
            return EXIT_USAGE;
        }
    };
    let start = Instant::now();
    let key = cache_key(&job);
    let cache = job.cache_dir.as_ref().map(Cache::new);

    let mut outcome: Option<Outcome> = None;
    if let Some(c) = &cache {
        match c.get(&key) {
            Lookup::Hit(v) => match Outcome::from_value(&v) {
                Some(o) => {
                    let _ = writeln!(err, "flaghg: cache: hit {}", key);
                    outcome = Some(o);
                }
                None => {
                    let _ = writeln!(err, "flaghg: warning: cache entry {} is malformed; recomputing", c.path(&key).display());
                }
            },
            Lookup::Miss => {
                let _ = writeln!(err, "flaghg: cache: miss {}", key);
            }
            Lookup::Corrupt(why) => {
                let _ = writeln!(err, "flaghg: warning: cache entry unusable ({}); recomputing", why);
            }
        }
    }
    let outcome = match outcome {
        Some(o) => o,
        None => match execute(&job) {
            Ok(o) => {
                if let Some(c) = &cache {
                    if let Err(e) = c.put(&key, &o.to_value()) {
                        let _ = writeln!(err, "flaghg: warning: could not write cache in {}: {}", c.dir().display(), e);
                    }
                }
                o
            }
            Err(e) => {
                let s = &job.spec;
                let _ = writeln!(
                    err,
                    "flaghg: error: {} on n={} ranks={:?} degrees={:?}: {}",
                    job.command.name(),
                    s.n(),
                    s.ranks(),
                    s.degrees(),
                    e
                );
                return EXIT_COMPUTE;
            }
        },
    };

    let text = match job.format {
        Format::Json => report::render_json(&job, &outcome),
        Format::Text => report::render_text(&job, &outcome),
    };
    let _ = out.write_all(text.as_bytes());
    let _ = writeln!(err, "flaghg: elapsed {:.3} s", start.elapsed().as_secs_f64());
    if outcome.verified {
        EXIT_OK
    } else {
        EXIT_VERIFY
    }
}

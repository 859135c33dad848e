//! Bundled worked examples. Each fixture carries its input documents and a
//! list of runs with the expected document (a subset match) or error.

use std::collections::BTreeMap;

use clap::Parser;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::args::{Cli, ExamplesCmd};
use crate::commands::{self, CliError, Output, Source};

const FIXTURES: &[&str] = &[
    include_str!("../fixtures/3.2.12.json"),
    include_str!("../fixtures/3.2.13.json"),
    include_str!("../fixtures/3.2.14.json"),
    include_str!("../fixtures/3.2.15.json"),
    include_str!("../fixtures/3.2.19.json"),
    include_str!("../fixtures/3.3.4.json"),
    include_str!("../fixtures/3.6.1.json"),
    include_str!("../fixtures/3.6.3.json"),
    include_str!("../fixtures/3.7.2.json"),
    include_str!("../fixtures/3.7.4.json"),
    include_str!("../fixtures/3.7.5.json"),
    include_str!("../fixtures/3.7.7.json"),
    include_str!("../fixtures/3.8.1.json"),
    include_str!("../fixtures/4.1.11.json"),
    include_str!("../fixtures/4.1.27.json"),
    include_str!("../fixtures/4.1.28.json"),
    include_str!("../fixtures/4.1.29.json"),
    include_str!("../fixtures/4.5.5.json"),
];

#[derive(Debug, Deserialize)]
pub struct Fixture {
    pub id: String,
    pub title: String,
    pub files: BTreeMap<String, Value>,
    pub runs: Vec<Run>,
}

#[derive(Debug, Deserialize)]
pub struct Run {
    pub argv: Vec<String>,
    #[serde(default)]
    pub expected: Option<Value>,
    /// Variant name of the expected library error.
    #[serde(default)]
    pub expected_error: Option<String>,
}

pub fn fixtures() -> Vec<Fixture> {
    FIXTURES
        .iter()
        .map(|s| serde_json::from_str(s).expect("bundled fixtures parse"))
        .collect()
}

impl Source for Fixture {
    fn read(&self, name: &str) -> Result<String, CliError> {
        self.files
            .get(name)
            .map(|v| serde_json::to_string(v).expect("documents serialize"))
            .ok_or_else(|| CliError::Usage(format!("example {} has no file {name}", self.id)))
    }
}

/// Every key and array element of `want` appears in `got`; arrays must
/// have equal length.
pub fn contains(want: &Value, got: &Value) -> bool {
    match (want, got) {
        (Value::Object(w), Value::Object(g)) => w.iter().all(|(k, v)| g.get(k).is_some_and(|x| contains(v, x))),
        (Value::Array(w), Value::Array(g)) => w.len() == g.len() && w.iter().zip(g).all(|(a, b)| contains(a, b)),
        _ => want == got,
    }
}

struct Outcome {
    argv: Vec<String>,
    matched: bool,
    text: String,
    doc: Value,
}

fn execute(fx: &Fixture, run: &Run) -> Outcome {
    let parsed = Cli::try_parse_from(std::iter::once("bialg".to_string()).chain(run.argv.iter().cloned()))
        .map_err(|e| CliError::Usage(e.to_string().trim().to_string()));
    let result = parsed.and_then(|cli| commands::run(&cli.command, fx));
    let (matched, text, doc) = match result {
        Ok(out) => {
            let matched = run.expected_error.is_none() && run.expected.as_ref().is_none_or(|w| contains(w, &out.doc));
            (matched, out.text, out.doc)
        }
        Err(e) => {
            let text = e.to_string();
            let matched = run
                .expected_error
                .as_ref()
                .is_some_and(|name| text.starts_with(&format!("error[{name}]")));
            (matched, text.clone(), json!({"error": text}))
        }
    };
    Outcome {
        argv: run.argv.clone(),
        matched,
        text,
        doc,
    }
}

/// Runs one example or all of them; the count is the number of mismatches.
pub fn run(cmd: &ExamplesCmd) -> Result<(Output, usize), CliError> {
    let all = fixtures();
    match cmd {
        ExamplesCmd::List => {
            let lines: Vec<String> = all.iter().map(|f| format!("{:<8} {}", f.id, f.title)).collect();
            let doc = all.iter().map(|f| json!({"id": f.id, "title": f.title})).collect();
            Ok((
                Output {
                    doc: Value::Array(doc),
                    text: lines.join("\n"),
                    stream: false,
                },
                0,
            ))
        }
        ExamplesCmd::Run { id, all: every } => {
            let chosen: Vec<&Fixture> = if *every {
                all.iter().collect()
            } else {
                let id = id.as_deref().unwrap_or_default();
                let f = all
                    .iter()
                    .find(|f| f.id == id)
                    .ok_or_else(|| CliError::Usage(format!("no example {id}; see `bialg examples list`")))?;
                vec![f]
            };
            let mut text = Vec::new();
            let mut docs = Vec::new();
            let mut failed = 0;
            for f in &chosen {
                text.push(format!("== {}  {}", f.id, f.title));
                let mut runs = Vec::new();
                for r in &f.runs {
                    let o = execute(f, r);
                    text.push(format!("$ bialg {}", o.argv.join(" ")));
                    text.push(o.text.clone());
                    if o.matched {
                        text.push("MATCH".into());
                    } else {
                        failed += 1;
                        let want = r.expected.as_ref().map(Value::to_string).or(r.expected_error.clone());
                        text.push(format!("MISMATCH, expected {}", want.unwrap_or_default()));
                    }
                    runs.push(json!({"argv": o.argv, "matched": o.matched, "output": o.doc}));
                }
                docs.push(json!({"id": f.id, "title": f.title, "runs": runs}));
                text.push(String::new());
            }
            let total: usize = chosen.iter().map(|f| f.runs.len()).sum();
            text.push(format!("{} of {total} runs match", total - failed));
            let doc = json!({"examples": docs, "matched": total - failed, "total": total});
            Ok((
                Output {
                    doc,
                    text: text.join("\n"),
                    stream: false,
                },
                failed,
            ))
        }
    }
}

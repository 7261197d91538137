use std::time::Instant;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Human,
    Json,
    Tsv,
}

/// What every command prints under `--json`.
#[derive(Serialize)]
pub struct RunReport<I: Serialize, O: Serialize> {
    /// The invocation, quoted so it can be pasted back.
    pub command: String,
    pub inputs: I,
    pub outputs: O,
    pub millis: u128,
}

pub fn command_echo() -> String {
    let mut args = std::env::args();
    let mut parts = vec!["m4cyclic".to_string()];
    args.next();
    parts.extend(args.map(|a| quote(&a)));
    parts.join(" ")
}

fn quote(a: &str) -> String {
    let plain = !a.is_empty() && a.chars().all(|c| c.is_ascii_alphanumeric() || "-_=.,/:^".contains(c));
    if plain {
        a.to_string()
    } else {
        format!("'{}'", a.replace('\'', r"'\''"))
    }
}

pub struct Timer(Instant);

impl Timer {
    pub fn start() -> Timer {
        Timer(Instant::now())
    }

    pub fn report<I: Serialize, O: Serialize>(&self, inputs: I, outputs: O) -> RunReport<I, O> {
        RunReport { command: command_echo(), inputs, outputs, millis: self.0.elapsed().as_millis() }
    }
}

pub fn print_json<T: Serialize>(v: &T) {
    println!("{}", serde_json::to_string_pretty(v).expect("report serializes"));
}

pub fn tsv_row<I: IntoIterator<Item = S>, S: ToString>(cells: I) {
    println!("{}", cells.into_iter().map(|c| c.to_string()).collect::<Vec<_>>().join("\t"));
}

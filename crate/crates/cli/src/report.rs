use std::io::Write;

use cyclokit::Error;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Affirmative = 0,
    Negative = 1,
    InputError = 2,
    Internal = 3,
}

/// What a command produced: text for people, JSON for programs.
pub struct Report {
    pub text: String,
    pub json: Value,
    pub status: Status,
}

impl Report {
    pub fn new(text: impl Into<String>, json: Value) -> Self {
        Report { text: text.into(), json, status: Status::Affirmative }
    }

    /// Marks the answer as a certified negative unless `affirmative`.
    pub fn answer(mut self, affirmative: bool) -> Self {
        self.status = if affirmative { Status::Affirmative } else { Status::Negative };
        self
    }

    pub fn print(&self, command: &str, as_json: bool) {
        let mut out = std::io::stdout().lock();
        let _ = if as_json {
            writeln!(out, "{}", json!({ "command": command, "result": self.json }))
        } else {
            writeln!(out, "{}", self.text.trim_end())
        };
    }
}

pub fn status_of(err: &Error) -> Status {
    match err {
        Error::Invariant(_) => Status::Internal,
        _ => Status::InputError,
    }
}

pub fn print_error(command: &str, as_json: bool, err: &Error) -> Status {
    let status = status_of(err);
    if as_json {
        let kind = match err {
            Error::Domain(_) => "domain",
            Error::Pole(_) => "pole",
            Error::Input(_) => "input",
            Error::Parse { .. } => "parse",
            Error::Resource(_) => "resource",
            Error::Construction(_) => "construction",
            Error::Invariant(_) => "invariant",
        };
        let _ = writeln!(
            std::io::stdout().lock(),
            "{}",
            json!({ "command": command, "error": { "kind": kind, "message": err.to_string() } })
        );
    } else {
        eprintln!("error: {err}");
    }
    status
}

//! Line-oriented solution certificates.
//!
//! ```text
//! # instance: fig1:k=3,m=3,seed=0
//! kind orpath
//! n 6
//! sequence 1 2 0 4 5 3
//! backward_steps 1 4
//! sigma_minus 2
//! bound 2
//! trace case strongify-case-3: two initial and two terminal components
//! trace terminal two-semicomplete-rotation
//! ```
//!
//! `backward_steps` lists step indices (step `i` joins positions `i` and
//! `i + 1`, wrapping for cycles). `trace` lines may repeat; `#` lines are
//! comments, of which an `instance:` comment is kept as the spec echo.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use backarc::oracle::{verify_certificate, Check, VerificationReport};
use backarc::{audit_sequence, Digraph, Vertex};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Orpath,
    Orcycle,
}

impl Kind {
    pub fn closed(self) -> bool {
        self == Kind::Orcycle
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Orpath => "orpath",
            Kind::Orcycle => "orcycle",
        })
    }
}

impl FromStr for Kind {
    type Err = CertError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "orpath" => Ok(Kind::Orpath),
            "orcycle" => Ok(Kind::Orcycle),
            other => Err(CertError::Field {
                field: "kind",
                message: format!("unknown kind {other:?}"),
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("field {field}: {message}")]
    Field { field: &'static str, message: String },
    #[error("missing field {0}")]
    Missing(&'static str),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub kind: Kind,
    pub n: usize,
    pub sequence: Vec<Vertex>,
    pub backward_steps: Vec<usize>,
    pub sigma_minus: usize,
    pub bound: usize,
    pub trace: Vec<String>,
    pub instance: Option<String>,
}

impl Certificate {
    /// Builds a certificate for `sequence`, counting its backward steps
    /// against `d`.
    pub fn new(d: &Digraph, kind: Kind, sequence: Vec<Vertex>, bound: usize) -> Self {
        let audit = audit_sequence(d, &sequence, kind.closed());
        Certificate {
            kind,
            n: d.n(),
            sequence,
            backward_steps: audit.backward_steps,
            sigma_minus: audit.sigma_minus,
            bound,
            trace: Vec::new(),
            instance: None,
        }
    }

    pub fn with_trace(mut self, lines: Vec<String>) -> Self {
        self.trace = lines;
        self
    }

    pub fn with_instance(mut self, spec: Option<String>) -> Self {
        self.instance = spec;
        self
    }

    /// Re-checks the certificate against `d` from scratch, including that
    /// the recorded counts agree with a fresh count.
    pub fn verify(&self, d: &Digraph) -> VerificationReport {
        let mut report = verify_certificate(d, &self.sequence, self.kind.closed(), self.bound);
        let fresh = audit_sequence(d, &self.sequence, self.kind.closed());
        let mut push = |name, passed: bool, detail: String| report.checks.push(Check { name, passed, detail });
        push(
            "order",
            self.n == d.n(),
            format!("certificate n = {}, digraph n = {}", self.n, d.n()),
        );
        push(
            "sigma-minus-recorded",
            fresh.valid && fresh.sigma_minus == self.sigma_minus,
            format!("recorded {}, recounted {}", self.sigma_minus, fresh.sigma_minus),
        );
        push(
            "backward-steps-recorded",
            fresh.valid && fresh.backward_steps == self.backward_steps,
            format!("recorded {:?}, recounted {:?}", self.backward_steps, fresh.backward_steps),
        );
        report
    }

    pub fn to_text(&self) -> String {
        let join = |xs: &[usize]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        let mut out = String::new();
        if let Some(spec) = &self.instance {
            let _ = writeln!(out, "# instance: {spec}");
        }
        let _ = writeln!(out, "kind {}", self.kind);
        let _ = writeln!(out, "n {}", self.n);
        let _ = writeln!(out, "sequence {}", join(&self.sequence));
        let _ = writeln!(out, "backward_steps {}", join(&self.backward_steps));
        let _ = writeln!(out, "sigma_minus {}", self.sigma_minus);
        let _ = writeln!(out, "bound {}", self.bound);
        for t in &self.trace {
            let _ = writeln!(out, "trace {t}");
        }
        // Lines are trimmed on read, so a trailing space would not round-trip.
        out.lines().map(str::trim_end).collect::<Vec<_>>().join("\n") + "\n"
    }

    pub fn parse(text: &str) -> Result<Self, CertError> {
        let mut kind = None;
        let mut n = None;
        let mut sequence = None;
        let mut backward_steps = None;
        let mut sigma_minus = None;
        let mut bound = None;
        let mut trace = Vec::new();
        let mut instance = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if let Some(comment) = line.strip_prefix('#') {
                if let Some(spec) = comment.trim().strip_prefix("instance:") {
                    instance = Some(spec.trim().to_string());
                }
                continue;
            }
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once(' ').unwrap_or((line, ""));
            let value = value.trim();
            let dup = |seen: bool| {
                if seen {
                    Err(CertError::Syntax {
                        line: line_no,
                        message: format!("repeated field {key}"),
                    })
                } else {
                    Ok(())
                }
            };
            match key {
                "kind" => {
                    dup(kind.is_some())?;
                    kind = Some(value.parse()?);
                }
                "n" => {
                    dup(n.is_some())?;
                    n = Some(number("n", value)?);
                }
                "sequence" => {
                    dup(sequence.is_some())?;
                    sequence = Some(numbers("sequence", value)?);
                }
                "backward_steps" => {
                    dup(backward_steps.is_some())?;
                    backward_steps = Some(numbers("backward_steps", value)?);
                }
                "sigma_minus" => {
                    dup(sigma_minus.is_some())?;
                    sigma_minus = Some(number("sigma_minus", value)?);
                }
                "bound" => {
                    dup(bound.is_some())?;
                    bound = Some(number("bound", value)?);
                }
                "trace" => trace.push(value.to_string()),
                other => {
                    return Err(CertError::Syntax {
                        line: line_no,
                        message: format!("unknown field {other:?}"),
                    })
                }
            }
        }
        Ok(Certificate {
            kind: kind.ok_or(CertError::Missing("kind"))?,
            n: n.ok_or(CertError::Missing("n"))?,
            sequence: sequence.ok_or(CertError::Missing("sequence"))?,
            backward_steps: backward_steps.ok_or(CertError::Missing("backward_steps"))?,
            sigma_minus: sigma_minus.ok_or(CertError::Missing("sigma_minus"))?,
            bound: bound.ok_or(CertError::Missing("bound"))?,
            trace,
            instance,
        })
    }
}

fn number(field: &'static str, s: &str) -> Result<usize, CertError> {
    s.parse().map_err(|_| CertError::Field {
        field,
        message: format!("not a non-negative integer: {s:?}"),
    })
}

fn numbers(field: &'static str, s: &str) -> Result<Vec<usize>, CertError> {
    s.split_whitespace().map(|t| number(field, t)).collect()
}

//! Ordered record of the cases and constructions a solver went through.

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StepKind {
    /// A case split that was entered.
    Case,
    /// A structural property established along the way.
    Claim,
    /// The construction that produced the returned walk.
    Terminal,
    Note,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub kind: StepKind,
    pub label: &'static str,
    pub note: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SolverTrace {
    steps: Vec<TraceStep>,
}

impl SolverTrace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn case(&mut self, label: &'static str, note: impl Into<String>) {
        self.push(StepKind::Case, label, note);
    }

    pub fn claim(&mut self, label: &'static str, note: impl Into<String>) {
        self.push(StepKind::Claim, label, note);
    }

    pub fn note(&mut self, label: &'static str, note: impl Into<String>) {
        self.push(StepKind::Note, label, note);
    }

    /// Records the producing construction. Earlier terminal entries (from
    /// nested sub-solvers) are demoted to notes so exactly one remains.
    pub fn terminal(&mut self, label: &'static str, note: impl Into<String>) {
        for s in &mut self.steps {
            if s.kind == StepKind::Terminal {
                s.kind = StepKind::Note;
            }
        }
        self.push(StepKind::Terminal, label, note);
    }

    fn push(&mut self, kind: StepKind, label: &'static str, note: impl Into<String>) {
        self.steps.push(TraceStep {
            kind,
            label,
            note: note.into(),
        });
    }

    pub(crate) fn extend(&mut self, other: SolverTrace) {
        self.steps.extend(other.steps);
    }


    pub fn steps(&self) -> &[TraceStep] {
        &self.steps
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The first case entered, i.e. the top-level branch.
    pub fn top_case(&self) -> Option<&'static str> {
        self.steps
            .iter()
            .find(|s| s.kind == StepKind::Case)
            .map(|s| s.label)
    }

    pub fn terminal_step(&self) -> Option<&TraceStep> {
        self.steps.iter().find(|s| s.kind == StepKind::Terminal)
    }

    pub fn terminal_count(&self) -> usize {
        self.steps
            .iter()
            .filter(|s| s.kind == StepKind::Terminal)
            .count()
    }

    /// One line per step, `kind label: note`.
    pub fn summary_lines(&self) -> Vec<String> {
        self.steps
            .iter()
            .map(|s| {
                let kind = match s.kind {
                    StepKind::Case => "case",
                    StepKind::Claim => "claim",
                    StepKind::Terminal => "terminal",
                    StepKind::Note => "note",
                };
                if s.note.is_empty() {
                    format!("{kind} {}", s.label)
                } else {
                    format!("{kind} {}: {}", s.label, s.note)
                }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn only_one_terminal_survives() {
        let mut t = SolverTrace::new();
        t.case("case-1", "");
        t.terminal("a", "");
        t.terminal("b", "x");
        assert_eq!(t.terminal_count(), 1);
        assert_eq!(t.terminal_step().unwrap().label, "b");
        assert_eq!(t.top_case(), Some("case-1"));
        assert_eq!(t.summary_lines()[2], "terminal b: x");
    }
}

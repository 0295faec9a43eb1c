//! Oriented paths and cycles, and the step-by-step audit that counts their
//! forward and backward arcs.

use crate::graph::{Digraph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AuditFailure {
    VertexOutOfRange { position: usize, vertex: Vertex },
    RepeatedVertex { position: usize, vertex: Vertex },
    /// Step `step` joins two vertices with no arc in either direction.
    NonAdjacentStep { step: usize, from: Vertex, to: Vertex },
    CycleTooShort { len: usize },
}

impl std::fmt::Display for AuditFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            AuditFailure::VertexOutOfRange { position, vertex } => {
                write!(f, "vertex {vertex} at position {position} is out of range")
            }
            AuditFailure::RepeatedVertex { position, vertex } => {
                write!(f, "vertex {vertex} repeats at position {position}")
            }
            AuditFailure::NonAdjacentStep { step, from, to } => {
                write!(f, "step {step} ({from},{to}) has no arc")
            }
            AuditFailure::CycleTooShort { len } => {
                write!(f, "closed sequence of length {len} is not a cycle")
            }
        }
    }
}

/// Forward/backward bookkeeping for a vertex sequence.
///
/// Step `i` goes from `seq[i]` to `seq[i + 1]`; for closed sequences the last
/// step wraps to `seq[0]`. A step is forward when its arc exists in the
/// travel direction (digon steps are forward) and backward when only the
/// reverse arc exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceAudit {
    pub valid: bool,
    pub closed: bool,
    pub sigma_plus: usize,
    pub sigma_minus: usize,
    pub backward_steps: Vec<usize>,
    pub failure: Option<AuditFailure>,
}

impl SequenceAudit {
    pub fn steps(&self) -> usize {
        self.sigma_plus + self.sigma_minus
    }
}

pub fn audit_sequence(d: &Digraph, seq: &[Vertex], closed: bool) -> SequenceAudit {
    let mut audit = SequenceAudit {
        valid: false,
        closed,
        sigma_plus: 0,
        sigma_minus: 0,
        backward_steps: Vec::new(),
        failure: None,
    };
    let mut seen = vec![false; d.n()];
    for (position, &vertex) in seq.iter().enumerate() {
        if vertex >= d.n() {
            audit.failure = Some(AuditFailure::VertexOutOfRange { position, vertex });
            return audit;
        }
        if seen[vertex] {
            audit.failure = Some(AuditFailure::RepeatedVertex { position, vertex });
            return audit;
        }
        seen[vertex] = true;
    }
    if closed && seq.len() < 3 {
        audit.failure = Some(AuditFailure::CycleTooShort { len: seq.len() });
        return audit;
    }
    let steps = if closed { seq.len() } else { seq.len().saturating_sub(1) };
    for step in 0..steps {
        let (from, to) = (seq[step], seq[(step + 1) % seq.len()]);
        if d.has_arc(from, to) {
            audit.sigma_plus += 1;
        } else if d.has_arc(to, from) {
            audit.sigma_minus += 1;
            audit.backward_steps.push(step);
        } else {
            audit.failure = Some(AuditFailure::NonAdjacentStep { step, from, to });
            audit.sigma_plus = 0;
            audit.sigma_minus = 0;
            audit.backward_steps.clear();
            return audit;
        }
    }
    audit.valid = true;
    audit
}

/// Backward steps of an open sequence, or `None` if it is not an orpath.
pub(crate) fn backward_count(d: &Digraph, seq: &[Vertex], closed: bool) -> Option<usize> {
    let a = audit_sequence(d, seq, closed);
    a.valid.then_some(a.sigma_minus)
}

/// An audited oriented path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrPath {
    sequence: Vec<Vertex>,
    audit: SequenceAudit,
}

impl OrPath {
    pub fn new(d: &Digraph, sequence: Vec<Vertex>) -> Result<Self, AuditFailure> {
        let audit = audit_sequence(d, &sequence, false);
        match audit.failure {
            Some(f) => Err(f),
            None => Ok(OrPath { sequence, audit }),
        }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.sequence
    }

    pub fn into_vertices(self) -> Vec<Vertex> {
        self.sequence
    }

    pub fn audit(&self) -> &SequenceAudit {
        &self.audit
    }

    pub fn sigma_minus(&self) -> usize {
        self.audit.sigma_minus
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    pub fn first(&self) -> Vertex {
        self.sequence[0]
    }

    pub fn last(&self) -> Vertex {
        *self.sequence.last().expect("non-empty orpath")
    }

    pub fn is_hamilton(&self, d: &Digraph) -> bool {
        self.sequence.len() == d.n()
    }
}

/// An audited oriented cycle. The wrap-around step is part of the counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrCycle {
    sequence: Vec<Vertex>,
    audit: SequenceAudit,
}

impl OrCycle {
    pub fn new(d: &Digraph, sequence: Vec<Vertex>) -> Result<Self, AuditFailure> {
        let audit = audit_sequence(d, &sequence, true);
        match audit.failure {
            Some(f) => Err(f),
            None => Ok(OrCycle { sequence, audit }),
        }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.sequence
    }

    pub fn audit(&self) -> &SequenceAudit {
        &self.audit
    }

    pub fn sigma_minus(&self) -> usize {
        self.audit.sigma_minus
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    pub fn is_hamilton(&self, d: &Digraph) -> bool {
        self.sequence.len() == d.n()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tt3() -> Digraph {
        Digraph::from_arcs(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn forward_and_reverse_tt3() {
        let d = tt3();
        let a = audit_sequence(&d, &[0, 1, 2], false);
        assert!(a.valid);
        assert_eq!((a.sigma_plus, a.sigma_minus), (2, 0));
        let b = audit_sequence(&d, &[2, 1, 0], false);
        assert_eq!((b.sigma_plus, b.sigma_minus), (0, 2));
        assert_eq!(b.backward_steps, vec![0, 1]);
    }

    #[test]
    fn closed_sequence_counts_wrap() {
        let d = tt3();
        let a = audit_sequence(&d, &[0, 1, 2], true);
        assert!(a.valid && a.closed);
        assert_eq!(a.steps(), 3);
        assert_eq!(a.backward_steps, vec![2]);
    }

    #[test]
    fn digon_steps_are_forward_both_ways() {
        let d = Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(audit_sequence(&d, &[0, 1], false).sigma_minus, 0);
        assert_eq!(audit_sequence(&d, &[1, 0], false).sigma_minus, 0);
    }

    #[test]
    fn failures_are_reported() {
        let d = Digraph::from_arcs(3, [(0, 1)]).unwrap();
        let a = audit_sequence(&d, &[0, 1, 2], false);
        assert!(!a.valid);
        assert_eq!(
            a.failure,
            Some(AuditFailure::NonAdjacentStep { step: 1, from: 1, to: 2 })
        );
        assert!(matches!(
            audit_sequence(&d, &[0, 0], false).failure,
            Some(AuditFailure::RepeatedVertex { position: 1, .. })
        ));
        assert!(matches!(
            audit_sequence(&d, &[0, 1], true).failure,
            Some(AuditFailure::CycleTooShort { len: 2 })
        ));
        assert!(matches!(
            audit_sequence(&d, &[5], false).failure,
            Some(AuditFailure::VertexOutOfRange { .. })
        ));
    }
}

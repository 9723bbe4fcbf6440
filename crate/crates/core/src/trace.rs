use std::fmt;

use serde::Serialize;

use crate::config::Puzzle;
use crate::error::{Error, Result};

/// One removal: the position taken and the encoding of the state after it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Step<P> {
    pub position: P,
    pub configuration: String,
}

/// A certificate that a configuration is removable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MoveTrace<P = usize> {
    pub initial: String,
    pub steps: Vec<Step<P>>,
}

impl<P: Copy + Eq + fmt::Display> MoveTrace<P> {
    pub fn new(initial: String) -> Self {
        MoveTrace {
            initial,
            steps: Vec::new(),
        }
    }

    pub fn push(&mut self, position: P, configuration: String) {
        self.steps.push(Step {
            position,
            configuration,
        });
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn positions(&self) -> Vec<P> {
        self.steps.iter().map(|s| s.position).collect()
    }

    /// Replays the trace from `start`, checking each recorded intermediate
    /// state and that nothing is left at the end.
    pub fn replay<C>(&self, start: &C) -> Result<C>
    where
        C: Puzzle<Pos = P>,
    {
        if start.to_string() != self.initial {
            return Err(Error::ReplayMismatch {
                step: 0,
                reason: format!("trace starts at {:?}, not {start}", self.initial),
            });
        }
        let mut cur = start.clone();
        for (k, step) in self.steps.iter().enumerate() {
            cur = cur
                .apply_move(step.position)
                .map_err(|e| Error::ReplayMismatch {
                    step: k + 1,
                    reason: e.to_string(),
                })?;
            let text = cur.to_string();
            if text != step.configuration {
                return Err(Error::ReplayMismatch {
                    step: k + 1,
                    reason: format!("expected {:?}, replay gave {text:?}", step.configuration),
                });
            }
        }
        if !cur.is_cleared() {
            return Err(Error::ReplayMismatch {
                step: self.steps.len(),
                reason: format!("{cur} still holds coins"),
            });
        }
        Ok(cur)
    }
}

impl<P: fmt::Display> fmt::Display for MoveTrace<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.initial)?;
        for step in &self.steps {
            write!(f, " -[{}]-> {}", step.position, step.configuration)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::LinearConfig;

    #[test]
    fn replay_accepts_the_worked_chain() {
        let start: LinearConfig = "11101".parse().unwrap();
        let mut trace = MoveTrace::new("11101".into());
        for (pos, cfg) in [(3, "1011"), (3, "110"), (2, "01"), (2, "1"), (1, "")] {
            trace.push(pos, cfg.into());
        }
        assert!(trace.replay(&start).unwrap().is_empty());
    }

    #[test]
    fn replay_rejects_wrong_states_and_leftovers() {
        let start: LinearConfig = "11".parse().unwrap();
        let mut trace = MoveTrace::new("11".into());
        trace.push(1, "1".into());
        assert!(matches!(
            trace.replay(&start),
            Err(Error::ReplayMismatch { step: 1, .. })
        ));

        let mut partial = MoveTrace::new("11".into());
        partial.push(1, "0".into());
        assert!(partial.replay(&start).is_err());
    }
}

//! Axiom reports: one entry per identity tag, passing unless some instance
//! failed, in which case the first counterexample is kept.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::field::{Field, Scalar};
use crate::linalg::Mat;

/// A failing instance: the basis indices that produced it and both sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub indices: Vec<usize>,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub tag: String,
    pub passed: bool,
    pub instances: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Entries are kept sorted by tag so merged reports are schedule independent.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    entries: BTreeMap<String, Entry>,
}

fn fmt_vec(field: Field, v: &[Scalar]) -> Vec<String> {
    v.iter().map(|x| field.format(x)).collect()
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    fn entry(&mut self, tag: &str) -> &mut Entry {
        self.entries
            .entry(tag.to_string())
            .or_insert_with(|| Entry {
                tag: tag.to_string(),
                passed: true,
                instances: 0,
                counterexample: None,
                note: None,
            })
    }

    /// Record a passing instance.
    pub fn pass(&mut self, tag: &str) {
        self.entry(tag).instances += 1;
    }

    /// Record a failing instance; only the first counterexample is stored.
    pub fn fail(&mut self, tag: &str, cx: Counterexample) {
        let e = self.entry(tag);
        e.instances += 1;
        if e.passed {
            e.passed = false;
            e.counterexample = Some(cx);
        }
    }

    /// Record a failure that has no numeric witness (e.g. a map that does not descend).
    pub fn fail_note(&mut self, tag: &str, note: impl Into<String>) {
        let e = self.entry(tag);
        e.instances += 1;
        if e.passed {
            e.passed = false;
            e.note = Some(note.into());
        }
    }

    pub fn check(&mut self, tag: &str, ok: bool, cx: impl FnOnce() -> Counterexample) {
        if ok {
            self.pass(tag)
        } else {
            self.fail(tag, cx())
        }
    }

    /// Compare two vectors.
    pub fn vec_eq(
        &mut self,
        tag: &str,
        indices: &[usize],
        lhs: &[Scalar],
        rhs: &[Scalar],
        field: Field,
    ) {
        self.check(tag, lhs == rhs, || Counterexample {
            indices: indices.to_vec(),
            lhs: fmt_vec(field, lhs),
            rhs: fmt_vec(field, rhs),
        });
    }

    /// Compare two linear maps column by column; the first differing column
    /// index is appended to `indices` in the counterexample.
    pub fn mat_eq(&mut self, tag: &str, indices: &[usize], lhs: &Mat, rhs: &Mat) {
        if lhs.shape() != rhs.shape() {
            self.fail_note(
                tag,
                format!(
                    "shape {:?} vs {:?} at {:?}",
                    lhs.shape(),
                    rhs.shape(),
                    indices
                ),
            );
            return;
        }
        if lhs == rhs {
            self.pass(tag);
            return;
        }
        let col = (0..lhs.cols())
            .find(|&j| lhs.col(j) != rhs.col(j))
            .unwrap_or(0);
        let mut idx = indices.to_vec();
        idx.push(col);
        let f = lhs.field();
        self.fail(
            tag,
            Counterexample {
                indices: idx,
                lhs: fmt_vec(f, &lhs.col(col)),
                rhs: fmt_vec(f, &rhs.col(col)),
            },
        );
    }

    pub fn merge(&mut self, other: Report) {
        for (tag, e) in other.entries {
            match self.entries.get_mut(&tag) {
                None => {
                    self.entries.insert(tag, e);
                }
                Some(mine) => {
                    mine.instances += e.instances;
                    if mine.passed && !e.passed {
                        mine.passed = false;
                        mine.counterexample = e.counterexample;
                        mine.note = e.note;
                    }
                }
            }
        }
    }

    /// Prefix every tag, e.g. to scope checks to one object.
    pub fn scoped(self, prefix: &str) -> Report {
        let entries = self
            .entries
            .into_values()
            .map(|mut e| {
                e.tag = format!("{prefix}{}", e.tag);
                (e.tag.clone(), e)
            })
            .collect();
        Report { entries }
    }

    pub fn ok(&self) -> bool {
        self.entries.values().all(|e| e.passed)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, tag: &str) -> Option<&Entry> {
        self.entries.get(tag)
    }

    /// Whether `tag` was checked and every instance passed.
    pub fn passed(&self, tag: &str) -> bool {
        self.get(tag).is_some_and(|e| e.passed)
    }

    pub fn entries(&self) -> impl Iterator<Item = &Entry> {
        self.entries.values()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries.values().filter(|e| !e.passed)
    }

    pub fn failed_tags(&self) -> Vec<String> {
        self.failures().map(|e| e.tag.clone()).collect()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.entries.keys().map(String::len).max().unwrap_or(0);
        for e in self.entries.values() {
            let status = if e.passed { "pass" } else { "FAIL" };
            write!(f, "{status:4}  {:width$} ({} checked)", e.tag, e.instances)?;
            if let Some(cx) = &e.counterexample {
                write!(
                    f,
                    "  at {:?}: [{}] != [{}]",
                    cx.indices,
                    cx.lhs.join(", "),
                    cx.rhs.join(", ")
                )?;
            }
            if let Some(n) = &e.note {
                write!(f, "  {n}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

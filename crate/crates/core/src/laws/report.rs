use std::fmt;
use std::str::FromStr;

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::arith::Sign;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Law {
    Ec,
    Burde,
    Gauss2,
    Scholz,
    ScholzMutual,
    Furuta,
}

impl Law {
    pub const ALL: [Law; 6] = [
        Law::Ec,
        Law::Burde,
        Law::Gauss2,
        Law::Scholz,
        Law::ScholzMutual,
        Law::Furuta,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Law::Ec => "ec",
            Law::Burde => "burde",
            Law::Gauss2 => "gauss2",
            Law::Scholz => "scholz",
            Law::ScholzMutual => "scholz_mutual",
            Law::Furuta => "furuta",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Law {
    type Err = String;

    fn from_str(s: &str) -> Result<Law, String> {
        let key = s.replace('-', "_");
        Law::ALL
            .into_iter()
            .find(|law| law.id() == key)
            .ok_or_else(|| format!("unknown law `{s}`"))
    }
}

/// One evaluated instance of a law.
///
/// `matched` is true iff there are at least two sides and all of them are
/// equal; a skipped report never matches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawReport {
    pub law: Law,
    pub inputs: Vec<(String, i64)>,
    pub sides: Vec<(String, Sign)>,
    pub matched: bool,
    pub skipped: Option<String>,
}

impl LawReport {
    pub fn checked(law: Law, inputs: Vec<(String, i64)>, sides: Vec<(String, Sign)>) -> LawReport {
        let mut report = LawReport {
            law,
            inputs,
            sides,
            matched: false,
            skipped: None,
        };
        report.refresh_match();
        report
    }

    pub fn skipped(law: Law, inputs: Vec<(String, i64)>, reason: impl Into<String>) -> LawReport {
        LawReport {
            law,
            inputs,
            sides: Vec::new(),
            matched: false,
            skipped: Some(reason.into()),
        }
    }

    pub(crate) fn refresh_match(&mut self) {
        self.matched =
            self.skipped.is_none() && self.sides.len() >= 2 && self.sides.iter().all(|(_, s)| *s == self.sides[0].1);
    }

    pub fn is_skipped(&self) -> bool {
        self.skipped.is_some()
    }

    pub fn is_mismatch(&self) -> bool {
        !self.is_skipped() && !self.matched
    }

    pub fn input(&self, name: &str) -> Option<i64> {
        self.inputs.iter().find(|(k, _)| k == name).map(|&(_, v)| v)
    }

    pub fn side_values(&self) -> Vec<i8> {
        self.sides.iter().map(|(_, s)| s.to_i8()).collect()
    }

    /// One line of the JSON-lines output.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// Human-oriented one-line rendering.
    pub fn to_table_row(&self) -> String {
        let inputs = self
            .inputs
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ");
        let verdict = match (&self.skipped, self.matched) {
            (Some(reason), _) => format!("SKIPPED ({reason})"),
            (None, true) => "MATCH".to_string(),
            (None, false) => "MISMATCH".to_string(),
        };
        let sides = self
            .sides
            .iter()
            .map(|(k, s)| format!("{k}={s:+}", s = s.to_i8()))
            .collect::<Vec<_>>()
            .join(" ");
        format!("{:<14} {inputs:<32} {sides} {verdict}", self.law.id())
    }
}

struct Inputs<'a>(&'a [(String, i64)]);

impl Serialize for Inputs<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl Serialize for LawReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("LawReport", 5)?;
        s.serialize_field("law", self.law.id())?;
        s.serialize_field("inputs", &Inputs(&self.inputs))?;
        s.serialize_field("sides", &self.side_values())?;
        s.serialize_field("match", &self.matched)?;
        s.serialize_field("skipped", &self.skipped)?;
        s.end()
    }
}

pub(crate) fn named(pairs: &[(&str, i64)]) -> Vec<(String, i64)> {
    pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

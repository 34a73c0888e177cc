use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Expected answer category of a question, and the category assigned to a
/// corpus sentence. Declaration order doubles as the tie-break order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SenseClass {
    Object,
    Person,
    Time,
    Cause,
    Place,
    Quantity,
    Number,
    Description,
}

impl SenseClass {
    pub const ALL: [SenseClass; 8] = [
        SenseClass::Object,
        SenseClass::Person,
        SenseClass::Time,
        SenseClass::Cause,
        SenseClass::Place,
        SenseClass::Quantity,
        SenseClass::Number,
        SenseClass::Description,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SenseClass::Object => "object",
            SenseClass::Person => "person",
            SenseClass::Time => "time",
            SenseClass::Cause => "cause",
            SenseClass::Place => "place",
            SenseClass::Quantity => "quantity",
            SenseClass::Number => "number",
            SenseClass::Description => "description",
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Option<SenseClass> {
        Self::ALL.get(i).copied()
    }
}

impl fmt::Display for SenseClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownSense(pub String);

impl fmt::Display for UnknownSense {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown sense class `{}`", self.0)
    }
}

impl std::error::Error for UnknownSense {}

impl FromStr for SenseClass {
    type Err = UnknownSense;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| UnknownSense(s.to_string()))
    }
}

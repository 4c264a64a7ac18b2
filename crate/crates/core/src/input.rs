//! One JSON entry point for every configuration type, told apart by keys.

use serde_json::Value;

use crate::configurations::{AcmConfig, GridPointSet};
use crate::error::{Error, Result};
use crate::staircase::{recognize, Arrangement, GeneratorSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Acm(AcmConfig),
    Points(GridPointSet),
    Arrangement(Arrangement),
    Generators(GeneratorSet),
}

impl Input {
    /// `"alpha"` without lines is an ACM configuration, `"cells"` a point
    /// set, `"line_h"`/`"line_v"` an arrangement and `"gens"` a generator set.
    pub fn parse(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let obj = value.as_object().ok_or_else(|| Error::Parse("expected a JSON object".into()))?;
        let has = |k: &str| obj.contains_key(k);
        let decode = |e: serde_json::Error| Error::Parse(e.to_string());
        if has("line_h") || has("line_v") {
            serde_json::from_value(value).map(Input::Arrangement).map_err(decode)
        } else if has("alpha") {
            serde_json::from_value(value).map(Input::Acm).map_err(decode)
        } else if has("cells") {
            serde_json::from_value(value).map(Input::Points).map_err(decode)
        } else if has("gens") {
            serde_json::from_value(value).map(Input::Generators).map_err(decode)
        } else {
            Err(Error::Parse("expected one of the keys alpha, cells, line_h, line_v, gens".into()))
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Input::Acm(_) => "acm",
            Input::Points(_) => "points",
            Input::Arrangement(_) => "arrangement",
            Input::Generators(_) => "generators",
        }
    }

    /// The arrangement this input describes, if it is one. Point sets
    /// qualify only when they are ACM.
    pub fn to_arrangement(&self) -> Result<Option<Arrangement>> {
        Ok(match self {
            Input::Acm(c) => Some(Arrangement::from_acm(c)),
            Input::Points(x) => x.to_acm().map(|c| Arrangement::from_acm(&c)),
            Input::Arrangement(w) => Some(w.clone()),
            Input::Generators(s) => Some(recognize(s)?),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::Partition;

    #[test]
    fn detects_each_kind() {
        assert_eq!(Input::parse(r#"{"alpha":[2,1]}"#).unwrap().kind(), "acm");
        assert_eq!(Input::parse(r#"{"cells":[[1,1]]}"#).unwrap().kind(), "points");
        assert_eq!(Input::parse(r#"{"line_h":1,"line_v":0,"alpha":[1]}"#).unwrap().kind(), "arrangement");
        assert_eq!(Input::parse(r#"{"gens":[[0,1],[1,0]],"ambient":[1,1]}"#).unwrap().kind(), "generators");
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(Input::parse("[1,2]"), Err(Error::Parse(_))));
        assert!(matches!(Input::parse("{\"beta\":[1]}"), Err(Error::Parse(_))));
        assert!(matches!(Input::parse("{\"alpha\":[1,2]}"), Err(Error::Parse(_))));
        assert!(matches!(Input::parse("{"), Err(Error::Parse(_))));
    }

    #[test]
    fn arrangements_from_inputs() {
        let w = Input::parse(r#"{"gens":[[0,2],[1,1],[2,0]],"ambient":[2,2]}"#).unwrap().to_arrangement().unwrap().unwrap();
        assert_eq!(w.alpha(), &Partition::new(vec![2, 1]).unwrap());
        let six = Input::parse(r#"{"cells":[[1,1],[1,2],[1,3],[2,1],[2,2],[3,4]]}"#).unwrap();
        assert_eq!(six.to_arrangement().unwrap(), None);
        let empty = Input::parse(r#"{"cells":[]}"#).unwrap();
        assert!(matches!(empty, Input::Points(ref x) if x.is_empty()));
    }
}

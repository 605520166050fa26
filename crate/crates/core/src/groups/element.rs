//! JSON documents for group elements:
//!
//! ```json
//! {"group": "hat2", "n": 2, "a": [["1","0"],["0","1"]], "f": [[["0","0"],["0","0"]], ...]}
//! ```
//!
//! `b` is present only for `tilde2`. For `tilde22` the `a` field holds `l` and
//! `f` holds `h`. An `A₂`-coset of `Ĝ²` uses the tag `quot` and carries its
//! symmetric representative.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{DeLeon1, DeLeon2, GHat2, GTilde2, GTilde21, GTilde22, JetGroup, QuotClassHat, T1nL1n, G2};
use crate::bilinear::Bilinear;
use crate::error::{Error, Result};
use crate::matrix::{GlMatrix, SquareMatrix};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Element {
    Tilde2(GTilde2),
    Hat2(GHat2),
    G2(G2),
    Tilde21(GTilde21),
    Tilde22(GTilde22),
    T1n(T1nL1n),
    DeLeon1(DeLeon1),
    DeLeon2(DeLeon2),
    Quot(QuotClassHat),
}

pub const QUOT_TAG: &str = "quot";

#[derive(Serialize, Deserialize)]
struct ElementDoc {
    group: String,
    n: usize,
    a: SquareMatrix,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    b: Option<SquareMatrix>,
    f: Vec<Vec<Vec<Rational>>>,
}

impl Element {
    pub fn tag(&self) -> &'static str {
        match self {
            Element::Tilde2(_) => GTilde2::TAG,
            Element::Hat2(_) => GHat2::TAG,
            Element::G2(_) => G2::TAG,
            Element::Tilde21(_) => GTilde21::TAG,
            Element::Tilde22(_) => GTilde22::TAG,
            Element::T1n(_) => T1nL1n::TAG,
            Element::DeLeon1(_) => DeLeon1::TAG,
            Element::DeLeon2(_) => DeLeon2::TAG,
            Element::Quot(_) => QUOT_TAG,
        }
    }

    pub fn n(&self) -> usize {
        match self {
            Element::Tilde2(x) => x.n(),
            Element::Hat2(x) => x.n(),
            Element::G2(x) => x.n(),
            Element::Tilde21(x) => x.n(),
            Element::Tilde22(x) => x.n(),
            Element::T1n(x) => x.n(),
            Element::DeLeon1(x) => x.n(),
            Element::DeLeon2(x) => x.n(),
            Element::Quot(x) => x.representative().n(),
        }
    }

    fn to_doc(&self) -> ElementDoc {
        let (a, b, f) = match self {
            Element::Tilde2(x) => (x.a.matrix(), Some(x.b.matrix().clone()), &x.f),
            Element::Hat2(x) => (x.a.matrix(), None, &x.f),
            Element::G2(x) => (x.a().matrix(), None, x.f()),
            Element::Tilde21(x) => (x.a.matrix(), None, &x.f),
            Element::Tilde22(x) => (x.l().matrix(), None, x.h()),
            Element::T1n(x) => (x.a.matrix(), None, &x.f),
            Element::DeLeon1(x) => (x.a.matrix(), None, &x.f),
            Element::DeLeon2(x) => (x.a.matrix(), None, &x.f),
            Element::Quot(x) => (x.representative().a().matrix(), None, x.representative().f()),
        };
        ElementDoc {
            group: self.tag().to_string(),
            n: self.n(),
            a: a.clone(),
            b,
            f: f.to_nested(),
        }
    }

    fn from_doc(doc: ElementDoc) -> Result<Self> {
        let f = Bilinear::from_nested(doc.f)?;
        for m in [doc.a.n(), f.n()] {
            if m != doc.n {
                return Err(Error::DimensionMismatch { expected: doc.n, got: m });
            }
        }
        let a = GlMatrix::new(doc.a)?;
        let tag = doc.group.as_str();
        if tag != GTilde2::TAG && doc.b.is_some() {
            return Err(Error::Parse(format!("field \"b\" is not allowed for group {tag:?}")));
        }
        Ok(match tag {
            "tilde2" => {
                let b = doc
                    .b
                    .ok_or_else(|| Error::Parse("group \"tilde2\" needs a \"b\" field".into()))?;
                Element::Tilde2(GTilde2::new(a, GlMatrix::new(b)?, f)?)
            }
            "hat2" => Element::Hat2(GHat2::new(a, f)?),
            "g2" => Element::G2(G2::new(a, f)?),
            "tilde21" => Element::Tilde21(GTilde21::new(a, f)?),
            "tilde22" => Element::Tilde22(GTilde22::new(a, f)?),
            "t1n" => Element::T1n(T1nL1n::new(a, f)?),
            "deleon1" => Element::DeLeon1(DeLeon1::new(a, f)?),
            "deleon2" => Element::DeLeon2(DeLeon2::new(a, f)?),
            QUOT_TAG => Element::Quot(QuotClassHat::of(&GHat2::new(a, f)?)),
            other => return Err(Error::Parse(format!("unknown group tag {other:?}"))),
        })
    }

    /// Parses and validates a document. A `tilde22` product whose `h` left the
    /// skew subset serializes fine but is rejected here.
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("element serializes")
    }
}

macro_rules! element_from {
    ($($ty:ty => $variant:ident),* $(,)?) => {
        $(impl From<$ty> for Element {
            fn from(x: $ty) -> Self {
                Element::$variant(x)
            }
        })*
    };
}

element_from! {
    GTilde2 => Tilde2,
    GHat2 => Hat2,
    G2 => G2,
    GTilde21 => Tilde21,
    GTilde22 => Tilde22,
    T1nL1n => T1n,
    DeLeon1 => DeLeon1,
    DeLeon2 => DeLeon2,
    QuotClassHat => Quot,
}

impl Serialize for Element {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_doc().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Element {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let doc = ElementDoc::deserialize(deserializer)?;
        Element::from_doc(doc).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn round_trip_every_tag() {
        let mut r = ChaCha8Rng::seed_from_u64(5);
        let elems = vec![
            Element::Tilde2(GTilde2::random(2, &mut r)),
            Element::Hat2(GHat2::random(2, &mut r)),
            Element::G2(G2::random(2, &mut r)),
            Element::Tilde21(GTilde21::random(2, &mut r)),
            Element::Tilde22(GTilde22::random(2, &mut r)),
            Element::T1n(T1nL1n::random(2, &mut r)),
            Element::DeLeon1(DeLeon1::random(2, &mut r)),
            Element::DeLeon2(DeLeon2::random(2, &mut r)),
            Element::Quot(QuotClassHat::of(&GHat2::random(2, &mut r))),
        ];
        for e in elems {
            let s = e.to_json();
            let back = Element::from_json(&s).unwrap();
            assert_eq!(back, e);
            assert_eq!(back.to_json(), s);
        }
    }

    #[test]
    fn rejects_bad_documents() {
        let singular = r#"{"group":"hat2","n":1,"a":[["0"]],"f":[[["1"]]]}"#;
        assert!(Element::from_json(singular).is_err());
        let no_b = r#"{"group":"tilde2","n":1,"a":[["1"]],"f":[[["1"]]]}"#;
        assert!(Element::from_json(no_b).is_err());
        let wrong_n = r#"{"group":"hat2","n":2,"a":[["1"]],"f":[[["1"]]]}"#;
        assert!(Element::from_json(wrong_n).is_err());
        let unknown = r#"{"group":"sl2","n":1,"a":[["1"]],"f":[[["1"]]]}"#;
        assert!(Element::from_json(unknown).is_err());
    }

    #[test]
    fn document_shape() {
        let x = GHat2::translation(Bilinear::zero(1));
        assert_eq!(
            Element::Hat2(x).to_json(),
            r#"{"group":"hat2","n":1,"a":[["1"]],"f":[[["0"]]]}"#
        );
    }
}

//! JSON frame documents:
//! `{"kind": "nonhol|semihol|hol", "n": n, "x": [...], "a": [[...]], "b": [[...]]?, "f": [[[...]]]}`.
//!
//! Projections to `FM` and `M` produce `{"kind": "lin", "n", "x", "a"}` and
//! `{"kind": "point", "n", "x"}`.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{HolFrame, LinFrame, NonHolFrame, Point, SemiHolFrame};
use crate::bilinear::Bilinear;
use crate::error::{Error, Result};
use crate::matrix::{GlMatrix, SquareMatrix};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FrameDoc {
    NonHol(NonHolFrame),
    SemiHol(SemiHolFrame),
    Hol(HolFrame),
    Lin(LinFrame),
    Point(Point),
}

#[derive(Serialize, Deserialize)]
struct RawFrame {
    kind: String,
    n: usize,
    x: Vec<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    a: Option<SquareMatrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    b: Option<SquareMatrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    f: Option<Vec<Vec<Vec<Rational>>>>,
}

impl FrameDoc {
    pub fn kind(&self) -> &'static str {
        match self {
            FrameDoc::NonHol(_) => "nonhol",
            FrameDoc::SemiHol(_) => "semihol",
            FrameDoc::Hol(_) => "hol",
            FrameDoc::Lin(_) => "lin",
            FrameDoc::Point(_) => "point",
        }
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("frame serializes")
    }

    fn to_raw(&self) -> RawFrame {
        let kind = self.kind().to_string();
        match self {
            FrameDoc::NonHol(q) => RawFrame {
                kind,
                n: q.n(),
                x: q.x.clone(),
                a: Some(q.a.matrix().clone()),
                b: Some(q.b.matrix().clone()),
                f: Some(q.f.to_nested()),
            },
            FrameDoc::SemiHol(q) => RawFrame {
                kind,
                n: q.n(),
                x: q.x.clone(),
                a: Some(q.a.matrix().clone()),
                b: None,
                f: Some(q.f.to_nested()),
            },
            FrameDoc::Hol(q) => RawFrame {
                kind,
                n: q.n(),
                x: q.x().clone(),
                a: Some(q.a().matrix().clone()),
                b: None,
                f: Some(q.f().to_nested()),
            },
            FrameDoc::Lin(q) => RawFrame {
                kind,
                n: q.a.n(),
                x: q.x.clone(),
                a: Some(q.a.matrix().clone()),
                b: None,
                f: None,
            },
            FrameDoc::Point(x) => RawFrame {
                kind,
                n: x.len(),
                x: x.clone(),
                a: None,
                b: None,
                f: None,
            },
        }
    }

    fn from_raw(raw: RawFrame) -> Result<Self> {
        let n = raw.n;
        if raw.x.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: raw.x.len() });
        }
        let field = |name: &str| Error::Parse(format!("kind {:?} needs field {name:?}", raw.kind));
        let forbid = |present: bool, name: &str| -> Result<()> {
            if present {
                Err(Error::Parse(format!("field {name:?} is not allowed for kind {:?}", raw.kind)))
            } else {
                Ok(())
            }
        };
        let gl = |m: Option<SquareMatrix>, name: &str| -> Result<GlMatrix> {
            let m = m.ok_or_else(|| field(name))?;
            if m.n() != n {
                return Err(Error::DimensionMismatch { expected: n, got: m.n() });
            }
            GlMatrix::new(m).map_err(|_| Error::NotAFrame(format!("{name} is singular")))
        };
        let bil = |f: Option<Vec<Vec<Vec<Rational>>>>| -> Result<Bilinear> {
            let f = Bilinear::from_nested(f.ok_or_else(|| field("f"))?)?;
            if f.n() != n {
                return Err(Error::DimensionMismatch { expected: n, got: f.n() });
            }
            Ok(f)
        };
        match raw.kind.as_str() {
            "nonhol" => Ok(FrameDoc::NonHol(NonHolFrame::new(
                raw.x.clone(),
                gl(raw.a.clone(), "a")?,
                gl(raw.b.clone(), "b")?,
                bil(raw.f.clone())?,
            )?)),
            "semihol" => {
                forbid(raw.b.is_some(), "b")?;
                Ok(FrameDoc::SemiHol(SemiHolFrame::new(
                    raw.x.clone(),
                    gl(raw.a.clone(), "a")?,
                    bil(raw.f.clone())?,
                )?))
            }
            "hol" => {
                forbid(raw.b.is_some(), "b")?;
                Ok(FrameDoc::Hol(HolFrame::new(
                    raw.x.clone(),
                    gl(raw.a.clone(), "a")?,
                    bil(raw.f.clone())?,
                )?))
            }
            "lin" => {
                forbid(raw.b.is_some() || raw.f.is_some(), "b/f")?;
                Ok(FrameDoc::Lin(LinFrame {
                    x: raw.x.clone(),
                    a: gl(raw.a.clone(), "a")?,
                }))
            }
            "point" => {
                forbid(raw.a.is_some() || raw.b.is_some() || raw.f.is_some(), "a/b/f")?;
                Ok(FrameDoc::Point(raw.x))
            }
            other => Err(Error::Parse(format!("unknown frame kind {other:?}"))),
        }
    }
}

impl From<NonHolFrame> for FrameDoc {
    fn from(q: NonHolFrame) -> Self {
        FrameDoc::NonHol(q)
    }
}

impl From<SemiHolFrame> for FrameDoc {
    fn from(q: SemiHolFrame) -> Self {
        FrameDoc::SemiHol(q)
    }
}

impl From<HolFrame> for FrameDoc {
    fn from(q: HolFrame) -> Self {
        FrameDoc::Hol(q)
    }
}

impl From<LinFrame> for FrameDoc {
    fn from(q: LinFrame) -> Self {
        FrameDoc::Lin(q)
    }
}

impl Serialize for FrameDoc {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_raw().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FrameDoc {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        FrameDoc::from_raw(RawFrame::deserialize(deserializer)?).map_err(serde::de::Error::custom)
    }
}

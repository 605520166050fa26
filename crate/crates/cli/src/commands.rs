//! Subcommand implementations. Each takes parsed arguments and returns the
//! JSON document to print.

use std::io::Read;

use jetframe::frames::{
    proj_hat22, proj_pi, proj_tilde22, theta_inv, FrameDoc, SecondOrderFrame,
};
use jetframe::groups::{
    coset_equal, mu, mu_inv, mul_t1n_coordinates, tau, tau_inv, DeLeon1, DeLeon2, Element,
    GHat2, GTilde2, GTilde21, GTilde22, JetGroup, QuotClassHat, T1nL1n, G2,
};
use jetframe::jets::{compose_2jets, frame_from_fm_map, g2_law_via_jets, left_act_diffeo, FMJetData, Map2Jet};
use jetframe::{random, Error};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use crate::report::SuiteReport;
use crate::rng;
use crate::suites::{self, RunConfig};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Lib(#[from] Error),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

/// Reads a file, or standard input for `-`.
pub fn read_input(path: &str) -> Result<String> {
    let io = |source| CliError::Io { path: path.to_string(), source };
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

fn parse<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()).into())
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("documents serialize")
}

fn element(x: impl Into<Element>) -> Value {
    to_value(&x.into())
}

fn frame(q: impl Into<FrameDoc>) -> Value {
    to_value(&q.into())
}

fn arity(what: &str, inputs: &[String], count: usize) -> Result<()> {
    if inputs.len() != count {
        return Err(CliError::Usage(format!(
            "{what} takes {count} input document(s), got {}",
            inputs.len()
        )));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum GenKind {
    #[value(name = "tilde2")]
    Tilde2,
    #[value(name = "hat2")]
    Hat2,
    #[value(name = "g2")]
    G2,
    #[value(name = "tilde21")]
    Tilde21,
    #[value(name = "tilde22")]
    Tilde22,
    #[value(name = "t1n")]
    T1n,
    #[value(name = "deleon1")]
    DeLeon1,
    #[value(name = "deleon2")]
    DeLeon2,
    #[value(name = "quot")]
    Quot,
    #[value(name = "nonhol")]
    NonHol,
    #[value(name = "semihol")]
    SemiHol,
    #[value(name = "hol")]
    Hol,
    #[value(name = "map2jet")]
    Map2Jet,
}

pub fn gen(kind: GenKind, n: usize, seed: u64) -> Result<Value> {
    if n == 0 {
        return Err(CliError::Usage("n must be at least 1".into()));
    }
    let r = &mut rng::root(seed);
    let x = |r: &mut _| random::point(n, r);
    Ok(match kind {
        GenKind::Tilde2 => element(GTilde2::random(n, r)),
        GenKind::Hat2 => element(GHat2::random(n, r)),
        GenKind::G2 => element(G2::random(n, r)),
        GenKind::Tilde21 => element(GTilde21::random(n, r)),
        GenKind::Tilde22 => element(GTilde22::random(n, r)),
        GenKind::T1n => element(T1nL1n::random(n, r)),
        GenKind::DeLeon1 => element(DeLeon1::random(n, r)),
        GenKind::DeLeon2 => element(DeLeon2::random(n, r)),
        GenKind::Quot => element(QuotClassHat::of(&GHat2::random(n, r))),
        GenKind::NonHol => {
            let p = x(r);
            frame(jetframe::frames::NonHolFrame::at(p, GTilde2::random(n, r))?)
        }
        GenKind::SemiHol => {
            let p = x(r);
            frame(jetframe::frames::SemiHolFrame::at(p, GHat2::random(n, r))?)
        }
        GenKind::Hol => {
            let p = x(r);
            frame(jetframe::frames::HolFrame::at(p, G2::random(n, r))?)
        }
        GenKind::Map2Jet => {
            let p = x(r);
            to_value(&Map2Jet::random(p, r))
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Operation {
    Mul,
    Inv,
    Conj,
    Decompose,
    Mu,
    MuInv,
    Tau,
    TauInv,
    CosetEqual,
}

fn parse_elements(inputs: &[String]) -> Result<Vec<Element>> {
    inputs.iter().map(|p| Ok(Element::from_json(&read_input(p)?)?)).collect()
}

fn mismatch(expected: &str, got: &Element) -> CliError {
    Error::GroupMismatch { expected: expected.to_string(), got: got.tag().to_string() }.into()
}

fn expect_hat2(x: &Element) -> Result<GHat2> {
    match x {
        Element::Hat2(x) => Ok(x.clone()),
        other => Err(mismatch(GHat2::TAG, other)),
    }
}

fn same_shape(x: &Element, y: &Element) -> Result<()> {
    if x.tag() != y.tag() {
        return Err(mismatch(x.tag(), y));
    }
    if x.n() != y.n() {
        return Err(Error::DimensionMismatch { expected: x.n(), got: y.n() }.into());
    }
    Ok(())
}

fn mul(x: &Element, y: &Element) -> Result<Element> {
    same_shape(x, y)?;
    Ok(match (x, y) {
        (Element::Tilde2(x), Element::Tilde2(y)) => x.mul(y).into(),
        (Element::Hat2(x), Element::Hat2(y)) => x.mul(y).into(),
        (Element::G2(x), Element::G2(y)) => x.mul(y).into(),
        (Element::Tilde21(x), Element::Tilde21(y)) => x.mul(y).into(),
        (Element::Tilde22(x), Element::Tilde22(y)) => x.mul(y).into(),
        (Element::T1n(x), Element::T1n(y)) => {
            let structural = x.mul(y);
            if structural != mul_t1n_coordinates(x, y) {
                return Err(CliError::Internal(
                    "structural and coordinate t1n laws disagree".into(),
                ));
            }
            structural.into()
        }
        (Element::DeLeon1(x), Element::DeLeon1(y)) => x.mul(y).into(),
        (Element::DeLeon2(x), Element::DeLeon2(y)) => x.mul(y).into(),
        (Element::Quot(x), Element::Quot(y)) => x.mul(y).into(),
        _ => unreachable!("tags checked"),
    })
}

fn inv(x: &Element) -> Element {
    match x {
        Element::Tilde2(x) => x.inv().into(),
        Element::Hat2(x) => x.inv().into(),
        Element::G2(x) => x.inv().into(),
        Element::Tilde21(x) => x.inv().into(),
        Element::Tilde22(x) => x.inv().into(),
        Element::T1n(x) => x.inv().into(),
        Element::DeLeon1(x) => x.inv().into(),
        Element::DeLeon2(x) => x.inv().into(),
        Element::Quot(x) => x.inv().into(),
    }
}

fn decompose_element(x: &Element) -> Result<Value> {
    let x = match x {
        Element::G2(g) => g.to_hat(),
        other => expect_hat2(other)?,
    };
    let (g, h) = x.decompose();
    Ok(json!({"g2": element(g), "a2": element(GHat2::translation(h))}))
}

pub fn op(operation: Operation, inputs: &[String]) -> Result<Value> {
    let name = format!("op {operation:?}").to_lowercase();
    let binary = matches!(operation, Operation::Mul | Operation::Conj | Operation::CosetEqual);
    arity(&name, inputs, if binary { 2 } else { 1 })?;
    let xs = parse_elements(inputs)?;
    let x = &xs[0];
    Ok(match operation {
        Operation::Mul => to_value(&mul(x, &xs[1])?),
        Operation::Inv => to_value(&inv(x)),
        Operation::Conj => {
            let (outer, inner) = (expect_hat2(x)?, expect_hat2(&xs[1])?);
            same_shape(x, &xs[1])?;
            element(outer.conj(&inner))
        }
        Operation::Decompose => decompose_element(x)?,
        Operation::Mu => match x {
            Element::Quot(c) => element(mu(c)),
            Element::Hat2(y) => element(mu(&QuotClassHat::of(y))),
            other => return Err(mismatch("quot", other)),
        },
        Operation::MuInv => match x {
            Element::G2(g) => element(mu_inv(g)),
            other => return Err(mismatch(G2::TAG, other)),
        },
        Operation::Tau => match x {
            Element::T1n(t) => element(tau(t)),
            other => return Err(mismatch(T1nL1n::TAG, other)),
        },
        Operation::TauInv => element(tau_inv(&expect_hat2(x)?)),
        Operation::CosetEqual => {
            let (a, b) = (expect_hat2(x)?, expect_hat2(&xs[1])?);
            same_shape(x, &xs[1])?;
            json!({"coset_equal": coset_equal(&a, &b)})
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Level {
    /// F̃²M → F̂²M
    #[value(name = "pi")]
    Pi,
    /// F̂²M → F²M
    #[value(name = "hat22")]
    Hat22,
    /// F̃²M → F²M
    #[value(name = "tilde22")]
    Tilde22,
    /// any second-order frame → FM
    #[value(name = "21")]
    ToLinear,
    /// any frame → M
    #[value(name = "20")]
    ToBase,
}

fn kind_mismatch(expected: &str, got: &FrameDoc) -> CliError {
    Error::KindMismatch { expected: expected.to_string(), got: got.kind().to_string() }.into()
}

pub fn project(level: Level, input: &str) -> Result<Value> {
    let doc = FrameDoc::from_json(&read_input(input)?)?;
    let out: FrameDoc = match (level, &doc) {
        (Level::Pi, FrameDoc::NonHol(q)) => proj_pi(q).into(),
        (Level::Pi, d) => return Err(kind_mismatch("nonhol", d)),
        (Level::Hat22, FrameDoc::SemiHol(q)) => proj_hat22(q).into(),
        (Level::Hat22, FrameDoc::Hol(q)) => proj_hat22(&q.to_semihol()).into(),
        (Level::Hat22, d) => return Err(kind_mismatch("semihol", d)),
        (Level::Tilde22, FrameDoc::NonHol(q)) => proj_tilde22(q).into(),
        (Level::Tilde22, d) => return Err(kind_mismatch("nonhol", d)),
        (Level::ToLinear, FrameDoc::NonHol(q)) => q.proj_21().into(),
        (Level::ToLinear, FrameDoc::SemiHol(q)) => q.proj_21().into(),
        (Level::ToLinear, FrameDoc::Hol(q)) => q.proj_21().into(),
        (Level::ToLinear, d) => return Err(kind_mismatch("nonhol|semihol|hol", d)),
        (Level::ToBase, FrameDoc::NonHol(q)) => FrameDoc::Point(q.proj_20()),
        (Level::ToBase, FrameDoc::SemiHol(q)) => FrameDoc::Point(q.proj_20()),
        (Level::ToBase, FrameDoc::Hol(q)) => FrameDoc::Point(q.proj_20()),
        (Level::ToBase, FrameDoc::Lin(q)) => FrameDoc::Point(q.proj_10()),
        (Level::ToBase, d) => return Err(kind_mismatch("nonhol|semihol|hol|lin", d)),
    };
    Ok(to_value(&out))
}

pub fn classify(input: &str) -> Result<Value> {
    let doc = FrameDoc::from_json(&read_input(input)?)?;
    let class = match &doc {
        FrameDoc::NonHol(q) => q.classify(),
        FrameDoc::SemiHol(q) => q.to_nonhol().classify(),
        FrameDoc::Hol(q) => q.to_nonhol().classify(),
        d => return Err(kind_mismatch("nonhol|semihol|hol", d)),
    };
    Ok(json!({"class": class}))
}

/// Splits a `Ĝ²` element into `G² × A₂`, or a semi-holonomic frame into its
/// class `[(p, (I, h))]` in the extension bundle.
pub fn decompose(input: &str) -> Result<Value> {
    let text = read_input(input)?;
    let raw: Value = parse(&text)?;
    if raw.get("group").is_some() {
        return decompose_element(&Element::from_json(&text)?);
    }
    let q = match FrameDoc::from_json(&text)? {
        FrameDoc::SemiHol(q) => q,
        FrameDoc::Hol(q) => q.to_semihol(),
        d => return Err(kind_mismatch("semihol|hol", &d)),
    };
    let c = theta_inv(&q);
    Ok(json!({
        "p": frame(c.p().clone()),
        "k": element(c.k().clone()),
        "sigma": c.k().f.to_nested(),
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OracleAction {
    /// `G ∘ F` for two 2-jets with `G.base = F.value`
    Compose,
    /// push a frame forward by a 2-jet based at its point
    Act,
    /// product of two `g2` elements as composition of 2-jets
    G2Law,
    /// the frame `(φ(0), φ_lin(0), Dφ(0), Dφ_lin(0))`
    Frame,
}

pub fn oracle(action: OracleAction, inputs: &[String]) -> Result<Value> {
    let name = format!("oracle {action:?}").to_lowercase();
    match action {
        OracleAction::Compose => {
            arity(&name, inputs, 2)?;
            let g: Map2Jet = parse(&read_input(&inputs[0])?)?;
            let f: Map2Jet = parse(&read_input(&inputs[1])?)?;
            Ok(to_value(&compose_2jets(&g, &f)?))
        }
        OracleAction::Act => {
            arity(&name, inputs, 2)?;
            let jet: Map2Jet = parse(&read_input(&inputs[0])?)?;
            let doc = FrameDoc::from_json(&read_input(&inputs[1])?)?;
            let out: FrameDoc = match &doc {
                FrameDoc::NonHol(q) => left_act_diffeo(&jet, q)?.into(),
                FrameDoc::SemiHol(q) => left_act_diffeo(&jet, &q.to_nonhol())?.to_semihol()?.into(),
                FrameDoc::Hol(q) => {
                    left_act_diffeo(&jet, &q.to_nonhol())?.to_semihol()?.to_hol()?.into()
                }
                d => return Err(kind_mismatch("nonhol|semihol|hol", d)),
            };
            Ok(to_value(&out))
        }
        OracleAction::G2Law => {
            arity(&name, inputs, 2)?;
            let xs = parse_elements(inputs)?;
            match (&xs[0], &xs[1]) {
                (Element::G2(p), Element::G2(q)) => {
                    same_shape(&xs[0], &xs[1])?;
                    Ok(element(g2_law_via_jets(p, q)))
                }
                (Element::G2(_), other) | (other, _) => Err(mismatch(G2::TAG, other)),
            }
        }
        OracleAction::Frame => {
            arity(&name, inputs, 1)?;
            let d: FMJetData = parse(&read_input(&inputs[0])?)?;
            Ok(frame(frame_from_fm_map(&d)?))
        }
    }
}

/// Runs one suite or, for `all`, every suite in order.
pub fn verify(suite: &str, cfg: &RunConfig) -> Result<Vec<SuiteReport>> {
    if cfg.trials == 0 {
        return Err(CliError::Usage("trials must be at least 1".into()));
    }
    if cfg.ns.contains(&0) {
        return Err(CliError::Usage("n must be at least 1".into()));
    }
    let selected: Vec<&suites::Suite> = if suite == "all" {
        suites::SUITES.iter().collect()
    } else {
        vec![suites::find(suite).ok_or_else(|| {
            CliError::Usage(format!(
                "unknown suite {suite:?}; expected one of all, {}",
                suites::names().join(", ")
            ))
        })?]
    };
    Ok(selected.into_iter().map(|s| suites::run(s, cfg)).collect())
}

pub fn verify_document(reports: &[SuiteReport]) -> Value {
    json!({
        "passed": reports.iter().all(|r| r.passed),
        "suites": reports,
    })
}

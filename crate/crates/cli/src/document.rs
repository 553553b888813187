//! JSON persistence of embedded graphs.
//!
//! A document stores exact vertex coordinates, both edge lists and the two
//! targets. Loading recomputes every edge from the coordinates and rejects
//! the file if the stored lists disagree. A spindled graph has no exact
//! coordinates for its rotated copy, so its document stores the base
//! vertices plus the spindle parameters and is rebuilt on load.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use twodist::exactnum::ExactReal;
use twodist::geometry::{Family, Hexagon, Pentagon};
use twodist::graphs::{spindle, EdgeGraph, SpindledGraph, TwoDistGraph};
use twodist::{Error, Result};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpindleSpec<T> {
    pub pivot: usize,
    pub target: usize,
    pub forbidden_sq: T,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphDocument<P, T> {
    pub version: u32,
    pub family: String,
    pub field: String,
    pub vertices: Vec<P>,
    pub targets: [T; 2],
    pub e1: Vec<(usize, usize)>,
    pub e2: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spindle: Option<SpindleSpec<T>>,
    pub provenance: String,
}

/// A loaded graph of either kind.
pub enum Embedded<F: Family> {
    Plain(TwoDistGraph<F>),
    Spindled(SpindledGraph<F>),
}

impl<F: Family> Embedded<F>
where
    F::Point: Serialize + DeserializeOwned,
    F::Field: Serialize + DeserializeOwned,
{
    pub fn graph(&self) -> &EdgeGraph {
        match self {
            Embedded::Plain(g) => g.graph(),
            Embedded::Spindled(s) => s.graph(),
        }
    }

    pub fn coords(&self) -> Vec<(f64, f64)> {
        match self {
            Embedded::Plain(g) => g.points().iter().map(F::to_f64_xy).collect(),
            Embedded::Spindled(s) => s.coords_f64(),
        }
    }

    pub fn provenance(&self) -> &str {
        match self {
            Embedded::Plain(g) => g.provenance(),
            Embedded::Spindled(s) => s.base().provenance(),
        }
    }

    pub fn to_document(&self) -> GraphDocument<F::Point, F::Field> {
        let (base, spec) = match self {
            Embedded::Plain(g) => (g, None),
            Embedded::Spindled(s) => (
                s.base(),
                Some(SpindleSpec {
                    pivot: s.pivot(),
                    target: s.target(),
                    forbidden_sq: s.forbidden_sq().clone(),
                }),
            ),
        };
        let (t1, t2) = base.targets();
        GraphDocument {
            version: FORMAT_VERSION,
            family: F::TAG.into(),
            field: F::FIELD.into(),
            vertices: base.points().to_vec(),
            targets: [t1.clone(), t2.clone()],
            e1: self.graph().e1().to_vec(),
            e2: self.graph().e2().to_vec(),
            spindle: spec,
            provenance: base.provenance().into(),
        }
    }

    pub fn from_document(doc: GraphDocument<F::Point, F::Field>) -> Result<Self> {
        if doc.version != FORMAT_VERSION {
            return Err(Error::Validation(format!(
                "unsupported format version {}",
                doc.version
            )));
        }
        if doc.family != F::TAG || doc.field != F::FIELD {
            return Err(Error::Validation(format!(
                "document is {} over {}, expected {} over {}",
                doc.family,
                doc.field,
                F::TAG,
                F::FIELD
            )));
        }
        let [t1, t2] = doc.targets;
        if t1 == t2 || t1.signum() <= 0 || t2.signum() <= 0 {
            return Err(Error::Validation(
                "targets must be positive and distinct".into(),
            ));
        }
        let stored = EdgeGraph::new(
            doc.spindle
                .as_ref()
                .map_or(doc.vertices.len(), |_| 2 * doc.vertices.len().max(1) - 1),
            &doc.e1,
            &doc.e2,
        )?;
        match doc.spindle {
            None => Ok(Embedded::Plain(TwoDistGraph::from_parts(
                doc.vertices,
                t1,
                t2,
                stored,
                doc.provenance,
            )?)),
            Some(spec) => {
                let base = TwoDistGraph::from_points(doc.vertices, t1, t2, doc.provenance);
                let s = spindle(&base, spec.pivot, spec.target, &spec.forbidden_sq)?;
                if s.graph() != &stored {
                    return Err(Error::Validation(
                        "stored edges disagree with the rebuilt spindle".into(),
                    ));
                }
                Ok(Embedded::Spindled(s))
            }
        }
    }
}

/// A loaded graph of either family.
pub enum AnyGraph {
    Pent(Embedded<Pentagon>),
    Hex(Embedded<Hexagon>),
}

macro_rules! both {
    ($self:expr, $g:ident => $e:expr) => {
        match $self {
            AnyGraph::Pent($g) => $e,
            AnyGraph::Hex($g) => $e,
        }
    };
}

impl AnyGraph {
    pub fn graph(&self) -> &EdgeGraph {
        both!(self, g => g.graph())
    }

    pub fn coords(&self) -> Vec<(f64, f64)> {
        both!(self, g => g.coords())
    }

    pub fn provenance(&self) -> &str {
        both!(self, g => g.provenance())
    }

    pub fn family(&self) -> &'static str {
        match self {
            AnyGraph::Pent(_) => Pentagon::TAG,
            AnyGraph::Hex(_) => Hexagon::TAG,
        }
    }

    pub fn is_spindled(&self) -> bool {
        both!(self, g => matches!(g, Embedded::Spindled(_)))
    }

    /// Exact re-check of every edge and certified separation of every
    /// non-edge. Spindled graphs were already certified when built.
    pub fn audit(&self) -> Result<usize> {
        both!(self, g => match g {
            Embedded::Plain(t) => t.audit(),
            Embedded::Spindled(s) => Ok(s.graph().edge_count()),
        })
    }

    pub fn to_json(&self) -> String {
        let v = both!(self, g => serde_json::to_string_pretty(&g.to_document()));
        v.expect("documents serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let family = value
            .get("family")
            .and_then(|f| f.as_str())
            .unwrap_or_default()
            .to_owned();
        let parse = |e: serde_json::Error| Error::Parse(e.to_string());
        if family == Pentagon::TAG {
            let doc = serde_json::from_value(value).map_err(parse)?;
            Ok(AnyGraph::Pent(Embedded::from_document(doc)?))
        } else if family == Hexagon::TAG {
            let doc = serde_json::from_value(value).map_err(parse)?;
            Ok(AnyGraph::Hex(Embedded::from_document(doc)?))
        } else {
            Err(Error::Parse(format!("unknown family {family:?}")))
        }
    }

    /// Vertex-induced subgraph with exact coordinates. Not available for
    /// spindled graphs.
    pub fn induced(&self, keep: &[usize], provenance: String) -> Result<AnyGraph> {
        fn go<F: Family>(g: &Embedded<F>, keep: &[usize], p: String) -> Result<Embedded<F>> {
            match g {
                Embedded::Plain(t) => Ok(Embedded::Plain(t.induced(keep).with_provenance(p))),
                Embedded::Spindled(_) => Err(Error::Validation(
                    "induced subgraphs of spindled graphs have no exact coordinates".into(),
                )),
            }
        }
        Ok(match self {
            AnyGraph::Pent(g) => AnyGraph::Pent(go(g, keep, provenance)?),
            AnyGraph::Hex(g) => AnyGraph::Hex(go(g, keep, provenance)?),
        })
    }

    /// Spindles a plain graph so the copies of `target` land at the given
    /// target distance (1 or 2, by index into the targets).
    pub fn spindled(&self, pivot: usize, target: usize, which: usize) -> Result<AnyGraph> {
        fn go<F: Family>(
            g: &Embedded<F>,
            pivot: usize,
            target: usize,
            which: usize,
        ) -> Result<Embedded<F>> {
            let Embedded::Plain(t) = g else {
                return Err(Error::Validation("graph is already spindled".into()));
            };
            let (t1, t2) = t.targets();
            let f = if which == 1 { t1.clone() } else { t2.clone() };
            Ok(Embedded::Spindled(spindle(t, pivot, target, &f)?))
        }
        Ok(match self {
            AnyGraph::Pent(g) => AnyGraph::Pent(go(g, pivot, target, which)?),
            AnyGraph::Hex(g) => AnyGraph::Hex(go(g, pivot, target, which)?),
        })
    }
}

impl From<TwoDistGraph<Pentagon>> for AnyGraph {
    fn from(g: TwoDistGraph<Pentagon>) -> Self {
        AnyGraph::Pent(Embedded::Plain(g))
    }
}

impl From<SpindledGraph<Pentagon>> for AnyGraph {
    fn from(g: SpindledGraph<Pentagon>) -> Self {
        AnyGraph::Pent(Embedded::Spindled(g))
    }
}

impl From<TwoDistGraph<Hexagon>> for AnyGraph {
    fn from(g: TwoDistGraph<Hexagon>) -> Self {
        AnyGraph::Hex(Embedded::Plain(g))
    }
}

impl From<SpindledGraph<Hexagon>> for AnyGraph {
    fn from(g: SpindledGraph<Hexagon>) -> Self {
        AnyGraph::Hex(Embedded::Spindled(g))
    }
}

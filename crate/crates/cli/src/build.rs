//! Catalog dispatch by name.

use twodist::catalog::{self, HexFilter, SpindleDistance};
use twodist::geometry::{Hexagon, Pentagon};
use twodist::graphs::TwoDistGraph;
use twodist::solver::{Budget, OrderPolicy};
use twodist::{Error, Result};

use crate::document::AnyGraph;

/// Knobs for the hexagon constructions; the defaults are the literal ones.
#[derive(Clone, Debug)]
pub struct BuildOptions {
    pub filter: HexFilter,
    pub policy: OrderPolicy,
    pub budget: Budget,
    pub distance: SpindleDistance,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            filter: HexFilter::default(),
            policy: OrderPolicy::Periphery,
            budget: Budget::unlimited(),
            distance: SpindleDistance::One,
        }
    }
}

pub fn build(name: &str, opts: &BuildOptions) -> Result<AnyGraph> {
    let pent = |s: twodist::geometry::PointSet<Pentagon>, p: &str| {
        let (t1, t2) = catalog::pent_targets();
        TwoDistGraph::<Pentagon>::from_points(s.into_points(), t1, t2, p.into())
    };
    let hex = |s: twodist::geometry::PointSet<Hexagon>, p: &str| {
        let (t1, t2) = catalog::hex_targets();
        TwoDistGraph::<Hexagon>::from_points(s.into_points(), t1, t2, p.into())
    };
    Ok(match name {
        "g5" => pent(catalog::g5(), "g5: unit pentagon").into(),
        "g126" => catalog::g126().into(),
        "g16" => catalog::g16()?.into(),
        "g31" => catalog::g31()?.into(),
        "g31-alt" => catalog::g31_alt()?.into(),
        "g7" => hex(catalog::g7(), "g7: hexagonal wheel").into(),
        "g19" => hex(catalog::g19(), "g19: wheel and its two rotations").into(),
        "g313" => catalog::g313_with(&opts.filter).into(),
        "g199" => reduced_hex(opts)?.graph.into(),
        "g397" => catalog::g397(&reduced_hex(opts)?, opts.distance)?.into(),
        _ => {
            return Err(Error::Parse(format!(
                "unknown graph {name:?}; known: {}",
                catalog::NAMES.join(", ")
            )))
        }
    })
}

fn reduced_hex(opts: &BuildOptions) -> Result<catalog::ReducedHex> {
    catalog::g199_with(&opts.filter, opts.policy, opts.budget)
}

//! `figure`: two series per user count, ring first.

use std::io::Write;

use entdist::heuristic::HeuristicSource;
use entdist::scenarios::{compare_range, EntanglementModel, ResourceRegime};
use entdist::topology::NetworkLayout;

use crate::args::{check_party_range, check_radius, FigureArgs, FigureId};
use crate::error::CliError;
use crate::output::{emit, num};

/// E_D only shifts the heuristic curves' parameters, not their values.
const HEURISTIC_E_DISTILLABLE: f64 = 0.5;

pub fn figure_rows(args: &FigureArgs) -> Result<Vec<(usize, f64, f64)>, CliError> {
    check_party_range(args.n_min, args.n_max)?;
    check_radius(args.radius)?;
    let averages = |model: &dyn EntanglementModel| -> Result<Vec<(usize, f64, f64)>, CliError> {
        Ok(compare_range(model, args.radius, args.n_min, args.n_max)?
            .records
            .into_iter()
            .map(|r| (r.n_parties, r.e_avg_ring, r.e_avg_star))
            .collect())
    };
    match args.figure {
        FigureId::Fig2 => averages(&ResourceRegime::OnePairTraveling),
        FigureId::Fig3 => averages(&ResourceRegime::OnePairPerWirelength),
        FigureId::HeuristicAd => averages(&HeuristicSource::AmplitudeDamped {
            e_distillable: HEURISTIC_E_DISTILLABLE,
        }),
        FigureId::ClassicalWire => (args.n_min..=args.n_max)
            .map(|n| {
                let ring = NetworkLayout::ring(n, args.radius)?.total_wire();
                let star = NetworkLayout::star(n, args.radius)?.total_wire();
                Ok((n, ring, star))
            })
            .collect(),
    }
}

pub fn render(figure: FigureId, rows: &[(usize, f64, f64)]) -> Result<Vec<u8>, CliError> {
    let header = match figure {
        FigureId::ClassicalWire => ["n_parties", "total_wire_ring", "total_wire_star"],
        _ => ["n_parties", "e_avg_ring", "e_avg_star"],
    };
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(header)?;
    for &(n, ring, star) in rows {
        writer.write_record([n.to_string(), num(ring), num(star)])?;
    }
    Ok(writer.into_inner().map_err(|e| e.into_error())?)
}

pub fn cmd_figure(args: &FigureArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let rows = figure_rows(args)?;
    emit(&render(args.figure, &rows)?, args.output.as_deref(), stdout)
}

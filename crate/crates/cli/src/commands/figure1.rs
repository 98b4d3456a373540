use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;
use spinwigner::singlet::{chebyshev_grid, Method, SingletWignerCurve};
use spinwigner::SpinQuantumNumber;

use crate::args::{Figure1Args, Format, FIGURE_SPINS};
use crate::error::{CliError, CliResult};

pub const CSV_HEADER: &str = "x,W_exact,W_cd,W_asymptotic";

/// The three curves of one spin on a shared Chebyshev grid.
#[derive(Debug, Clone, Serialize)]
pub struct FigureData {
    pub j: String,
    pub twice_j: u32,
    pub points: usize,
    pub x: Vec<f64>,
    #[serde(rename = "W_exact")]
    pub w_exact: Vec<f64>,
    #[serde(rename = "W_cd")]
    pub w_cd: Vec<f64>,
    #[serde(rename = "W_asymptotic")]
    pub w_asymptotic: Vec<f64>,
}

impl FigureData {
    pub fn compute(j: SpinQuantumNumber, points: usize) -> CliResult<Self> {
        let xs = chebyshev_grid::<f64>(points);
        let curve = |m| SingletWignerCurve::on_grid(j, xs.clone(), m);
        Ok(Self {
            j: j.to_string(),
            twice_j: j.twice(),
            points,
            w_exact: curve(Method::ExactSum)?.ws,
            w_cd: curve(Method::ChristoffelDarboux)?.ws,
            w_asymptotic: curve(Method::Asymptotic)?.ws,
            x: xs,
        })
    }

    /// Header plus one row per point, 17 significant digits per value.
    pub fn write_csv(&self, w: &mut impl Write) -> std::io::Result<()> {
        writeln!(w, "{CSV_HEADER}")?;
        for k in 0..self.points {
            writeln!(
                w,
                "{:.16e},{:.16e},{:.16e},{:.16e}",
                self.x[k], self.w_exact[k], self.w_cd[k], self.w_asymptotic[k]
            )?;
        }
        Ok(())
    }
}

pub fn file_name(j: SpinQuantumNumber, format: Format) -> String {
    let ext = match format {
        Format::Csv => "csv",
        Format::Json => "json",
    };
    format!("wigner_j{}.{ext}", j.file_tag())
}

fn write_one(path: &Path, data: &FigureData, format: Format) -> std::io::Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    match format {
        Format::Csv => data.write_csv(&mut w)?,
        Format::Json => {
            serde_json::to_writer(&mut w, data)?;
            writeln!(w)?;
        }
    }
    w.flush()
}

/// Writes one file per spin and returns their paths in input order.
pub fn run(args: &Figure1Args, out: &mut impl Write) -> CliResult<Vec<PathBuf>> {
    let spins = args.spins.resolve(&FIGURE_SPINS);
    let points =
        usize::try_from(args.points).map_err(|_| CliError::Usage("--points too large".into()))?;
    fs::create_dir_all(&args.out).map_err(|e| CliError::io(&args.out, e))?;
    let data = spins
        .par_iter()
        .map(|&j| FigureData::compute(j, points))
        .collect::<CliResult<Vec<_>>>()?;
    let mut written = Vec::with_capacity(data.len());
    for (j, d) in spins.iter().zip(&data) {
        let path = args.out.join(file_name(*j, args.format));
        write_one(&path, d, args.format).map_err(|e| CliError::io(&path, e))?;
        writeln!(out, "{}", path.display()).map_err(|e| CliError::io("<stdout>", e))?;
        written.push(path);
    }
    Ok(written)
}

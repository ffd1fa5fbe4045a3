//! Argument parsing and command dispatch.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use secfan_core::gitfan::{
    enumerate_chambers, fan_of_chamber, gale_dual, git_cone, irrelevant_ideal, is_generic,
    moving_cone, nef_cone, point_semistable_for_character, separated_pair, Chamber,
};
use secfan_core::{DegreeMatrix, DegreeVector, PointSupport};

use crate::report::{self, Format};
use crate::spec_file::{parse_fan_spec, parse_ring_spec};
use crate::svg::render_chamber_plot;
use crate::{from_core, CliError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Human,
    Machine,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Format {
        match f {
            OutputFormat::Human => Format::Human,
            OutputFormat::Machine => Format::Machine,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "secfan",
    version,
    about = "Weight cones, GIT chambers and secondary-fan data of multigraded polynomial rings"
)]
pub struct Cli {
    /// Output format: prose or a parseable key/value document
    #[arg(long, global = true, value_enum, default_value = "human")]
    pub format: OutputFormat,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the monomic relevant generators of the irrelevant ideal
    Relevants { ring: PathBuf },
    /// Enumerate all chambers, or describe the GIT cone of one degree
    Chambers {
        ring: PathBuf,
        /// Degree as comma-separated integers (free part, then torsion)
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
    },
    /// Intersection of the weight cones of all (n-1)-variable products
    Moving { ring: PathBuf },
    /// Chamber of a fan inside the weight space of its Gale-dual grading
    Nef { ring: PathBuf, fan: PathBuf },
    /// Grading Gale dual to a ray configuration
    Gale { fan: PathBuf },
    /// Fan of the model attached to the chamber of a generic degree
    FanOfChamber {
        ring: PathBuf,
        fan: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        at: String,
    },
    /// Decide whether two relevant monomials admit a separated gluing
    Separated { ring: PathBuf, f: String, h: String },
    /// Decide semistability of a point for a character
    Semistable {
        ring: PathBuf,
        /// Names of the nonzero coordinates, comma separated
        #[arg(long)]
        support: String,
        #[arg(long, allow_hyphen_values = true)]
        at: String,
    },
    /// Render the rank-2 chamber decomposition as a deterministic SVG
    Plot {
        ring: PathBuf,
        /// Output path for the SVG document
        #[arg(long)]
        out: PathBuf,
    },
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))
}

fn load_ring(path: &Path) -> Result<DegreeMatrix, CliError> {
    let text = read_file(path)?;
    let spec = parse_ring_spec(&text)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    spec.to_degree_matrix().map_err(from_core)
}

fn load_fan(path: &Path) -> Result<secfan_core::gitfan::Fan, CliError> {
    let text = read_file(path)?;
    let spec = parse_fan_spec(&text)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    spec.to_fan().map_err(from_core)
}

fn parse_degree(g: &DegreeMatrix, text: &str) -> Result<DegreeVector, CliError> {
    let mut entries = Vec::new();
    for part in text.split(',') {
        let part = part.trim();
        let n: BigInt = part
            .parse()
            .map_err(|_| CliError::Parse(format!("--at: expected integer, got `{part}`")))?;
        entries.push(n);
    }
    let r = g.rank();
    let k = g.group().torsion().len();
    if entries.len() == r {
        DegreeVector::from_free(g.group(), entries).map_err(from_core)
    } else if entries.len() == r + k {
        let free = entries[..r].to_vec();
        let tors = entries[r..].to_vec();
        DegreeVector::new(g.group(), free, tors).map_err(from_core)
    } else {
        Err(CliError::Parse(format!(
            "--at: expected {r} or {} integers, got {}",
            r + k,
            entries.len()
        )))
    }
}

fn parse_support(g: &DegreeMatrix, text: &str) -> Result<PointSupport, CliError> {
    let mut indices = Vec::new();
    for name in text.split(',') {
        let name = name.trim();
        if name.is_empty() {
            continue;
        }
        let i = g
            .variable_index(name)
            .ok_or_else(|| CliError::Domain(format!("unknown variable `{name}`")))?;
        indices.push(i);
    }
    Ok(PointSupport::new(indices))
}

fn parse_monomial(g: &DegreeMatrix, text: &str) -> Result<secfan_core::MonomialSupport, CliError> {
    g.parse_monomial(text)
        .ok_or_else(|| CliError::Domain(format!("cannot read `{text}` as a monomial in {g}")))
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    let format: Format = cli.format.into();
    match cli.command {
        Command::Relevants { ring } => {
            let g = load_ring(&ring)?;
            let gens = g.monomic_relevant_generators();
            report::print_relevants(&g, &gens, format);
        }
        Command::Chambers { ring, at } => {
            let g = load_ring(&ring)?;
            match at {
                None => {
                    let chambers = enumerate_chambers(&g).map_err(from_core)?;
                    report::print_chambers(&g, &chambers, format);
                }
                Some(text) => {
                    let a = parse_degree(&g, &text)?;
                    let cone = git_cone(&g, &a).map_err(from_core)?;
                    let generic = is_generic(&g, &a);
                    let ideal = irrelevant_ideal(&g, &a);
                    report::print_git_cone(&g, &a, &cone, generic, &ideal, format);
                }
            }
        }
        Command::Moving { ring } => {
            let g = load_ring(&ring)?;
            let cone = moving_cone(&g).map_err(from_core)?;
            let label = match format {
                Format::Human => "moving cone",
                Format::Machine => "moving",
            };
            report::print_cone_result(label, &cone, format);
        }
        Command::Nef { ring, fan } => {
            let g = load_ring(&ring)?;
            let fan = load_fan(&fan)?;
            let cone = nef_cone(&g, &fan).map_err(from_core)?;
            let label = match format {
                Format::Human => "nef cone",
                Format::Machine => "nef",
            };
            report::print_cone_result(label, &cone, format);
        }
        Command::Gale { fan } => {
            let fan = load_fan(&fan)?;
            let g = gale_dual(fan.rays()).map_err(from_core)?;
            report::print_gale(&g, format);
        }
        Command::FanOfChamber { ring, fan, at } => {
            let g = load_ring(&ring)?;
            let rays = load_fan(&fan)?.rays().to_vec();
            let a = parse_degree(&g, &at)?;
            if !is_generic(&g, &a) {
                return Err(CliError::Domain(format!(
                    "degree {} is not generic, so it lies in no chamber",
                    report::fmt_degree(&a)
                )));
            }
            let cone = git_cone(&g, &a).map_err(from_core)?;
            let gens = irrelevant_ideal(&g, &a);
            let chamber = Chamber {
                cone,
                defining_bases: gens.clone(),
                b_generators: gens,
                sample_point: a,
            };
            let fan = fan_of_chamber(&g, &chamber, &rays).map_err(from_core)?;
            report::print_fan(&fan, format);
        }
        Command::Separated { ring, f, h } => {
            let g = load_ring(&ring)?;
            let fs = parse_monomial(&g, &f)?;
            let hs = parse_monomial(&g, &h)?;
            let meet = g
                .weight_cone(&fs)
                .intersect(&g.weight_cone(&hs))
                .map_err(from_core)?;
            let sep = separated_pair(&g, &fs, &hs).map_err(from_core)?;
            match format {
                Format::Human => println!(
                    "{} and {}: {} (intersection dimension {})",
                    g.monomial_string(&fs),
                    g.monomial_string(&hs),
                    if sep { "separated" } else { "not separated" },
                    meet.dim()
                ),
                Format::Machine => {
                    println!("separated = {sep}");
                    println!("intersection.dim = {}", meet.dim());
                }
            }
        }
        Command::Semistable { ring, support, at } => {
            let g = load_ring(&ring)?;
            let x = parse_support(&g, &support)?;
            let a = parse_degree(&g, &at)?;
            let ss = point_semistable_for_character(&g, &x, &a);
            match format {
                Format::Human => {
                    let names: Vec<&str> =
                        x.nonzero().iter().map(|&i| g.names()[i].as_str()).collect();
                    println!(
                        "point with nonzero coordinates {{{}}} is {}semistable for {}",
                        names.join(", "),
                        if ss { "" } else { "not " },
                        report::fmt_degree(&a)
                    );
                }
                Format::Machine => println!("semistable = {ss}"),
            }
        }
        Command::Plot { ring, out } => {
            let g = load_ring(&ring)?;
            if g.rank() != 2 {
                return Err(CliError::Domain(format!(
                    "plot needs a rank-2 grading, got rank {}",
                    g.rank()
                )));
            }
            let svg = render_chamber_plot(&g).map_err(from_core)?;
            std::fs::write(&out, svg)
                .map_err(|e| CliError::Domain(format!("cannot write {}: {e}", out.display())))?;
            eprintln!("wrote chamber plot to {}", out.display());
        }
    }
    Ok(())
}

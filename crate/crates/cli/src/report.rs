//! Human- and machine-readable report rendering.
//!
//! Machine output is a deterministic `key = value` document in the same
//! grammar as the input files, so values can be re-parsed and compared
//! against fresh computations.

use num_bigint::BigInt;
use secfan_core::gitfan::{Chamber, Fan};
use secfan_core::{DegreeMatrix, DegreeVector, MonomialSupport, QCone};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Human,
    Machine,
}

pub fn fmt_tuple(v: &[BigInt]) -> String {
    let inner: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", inner.join(", "))
}

pub fn fmt_array(v: &[BigInt]) -> String {
    let inner: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", inner.join(", "))
}

pub fn fmt_index_array(v: &[usize]) -> String {
    let inner: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", inner.join(", "))
}

pub fn fmt_degree(d: &DegreeVector) -> String {
    if d.torsion_part().is_empty() {
        fmt_tuple(d.free_part())
    } else {
        let free: Vec<String> = d.free_part().iter().map(|x| x.to_string()).collect();
        let tors: Vec<String> = d.torsion_part().iter().map(|x| x.to_string()).collect();
        format!("({}; {})", free.join(", "), tors.join(", "))
    }
}

/// Human-readable cone summary: extreme rays and lineality lines.
pub fn fmt_cone_human(c: &QCone) -> String {
    if c.is_zero() {
        return "zero cone".to_string();
    }
    let mut parts = Vec::new();
    if !c.rays().is_empty() {
        let rays: Vec<String> = c.rays().iter().map(|r| fmt_tuple(r)).collect();
        parts.push(format!("rays {}", rays.join(", ")));
    }
    if !c.lineality().is_empty() {
        let lines: Vec<String> = c.lineality().iter().map(|l| fmt_tuple(l)).collect();
        parts.push(format!("lineality {}", lines.join(", ")));
    }
    parts.join("; ")
}

/// Machine block for a cone under a key prefix.
pub fn print_cone_machine(prefix: &str, c: &QCone) {
    println!("{prefix}.dim = {}", c.dim());
    println!("{prefix}.ray.count = {}", c.rays().len());
    for (i, r) in c.rays().iter().enumerate() {
        println!("{prefix}.ray.{i} = {}", fmt_array(r));
    }
    println!("{prefix}.lineality.count = {}", c.lineality().len());
    for (i, l) in c.lineality().iter().enumerate() {
        println!("{prefix}.lineality.{i} = {}", fmt_array(l));
    }
}

pub fn print_relevants(g: &DegreeMatrix, gens: &[MonomialSupport], format: Format) {
    match format {
        Format::Human => {
            println!("ring: {g}");
            println!("generators of the irrelevant ideal ({}):", gens.len());
            for b in gens {
                let degree = support_degree(g, b);
                println!("  {}  degree {}", g.monomial_string(b), fmt_degree(&degree));
            }
        }
        Format::Machine => {
            println!("generator.count = {}", gens.len());
            for (i, b) in gens.iter().enumerate() {
                println!("generator.{i}.support = {}", fmt_index_array(b.indices()));
                println!("generator.{i}.monomial = {}", g.monomial_string(b));
                let degree = support_degree(g, b);
                println!("generator.{i}.degree = {}", fmt_array(degree.free_part()));
            }
        }
    }
}

/// Degree of the product of the variables in a support.
pub fn support_degree(g: &DegreeMatrix, s: &MonomialSupport) -> DegreeVector {
    let mut acc = DegreeVector::zero(g.group());
    for &i in s.indices() {
        acc = acc.add(g.degree(i), g.group()).expect("uniform shapes");
    }
    acc
}

fn monomial_list(g: &DegreeMatrix, gens: &[MonomialSupport]) -> String {
    gens.iter()
        .map(|b| g.monomial_string(b))
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn print_chambers(g: &DegreeMatrix, chambers: &[Chamber], format: Format) {
    match format {
        Format::Human => {
            println!("ring: {g}");
            println!("weight space: {}", fmt_cone_human(&g.weight_space()));
            println!("chambers: {}", chambers.len());
            for (i, c) in chambers.iter().enumerate() {
                println!("chamber {i}:");
                println!("  cone: {}", fmt_cone_human(&c.cone));
                println!(
                    "  defining bases / irrelevant ideal: {}",
                    monomial_list(g, &c.b_generators)
                );
                let unused = c.always_used_indices();
                let unused_names: Vec<&str> =
                    unused.iter().map(|&i| g.names()[i].as_str()).collect();
                println!(
                    "  rays unused by the model: {}",
                    if unused_names.is_empty() {
                        "none".to_string()
                    } else {
                        unused_names.join(", ")
                    }
                );
                println!("  sample point: {}", fmt_degree(&c.sample_point));
            }
        }
        Format::Machine => {
            println!("chamber.count = {}", chambers.len());
            for (i, c) in chambers.iter().enumerate() {
                print_cone_machine(&format!("chamber.{i}"), &c.cone);
                println!("chamber.{i}.basis.count = {}", c.b_generators.len());
                for (j, b) in c.b_generators.iter().enumerate() {
                    println!("chamber.{i}.basis.{j} = {}", fmt_index_array(b.indices()));
                }
                println!(
                    "chamber.{i}.sample = {}",
                    fmt_array(c.sample_point.free_part())
                );
                println!(
                    "chamber.{i}.unused = {}",
                    fmt_index_array(&c.always_used_indices())
                );
            }
        }
    }
}

pub fn print_git_cone(
    g: &DegreeMatrix,
    a: &DegreeVector,
    cone: &QCone,
    generic: bool,
    ideal: &[MonomialSupport],
    format: Format,
) {
    match format {
        Format::Human => {
            println!("degree: {}", fmt_degree(a));
            println!("GIT cone: {}", fmt_cone_human(cone));
            println!("generic: {}", if generic { "yes" } else { "no" });
            println!("irrelevant ideal: {}", monomial_list(g, ideal));
        }
        Format::Machine => {
            println!("degree = {}", fmt_array(a.free_part()));
            println!("generic = {generic}");
            print_cone_machine("cone", cone);
            println!("ideal.count = {}", ideal.len());
            for (i, b) in ideal.iter().enumerate() {
                println!("ideal.{i} = {}", fmt_index_array(b.indices()));
            }
        }
    }
}

pub fn print_cone_result(label: &str, cone: &QCone, format: Format) {
    match format {
        Format::Human => println!("{label}: {}", fmt_cone_human(cone)),
        Format::Machine => print_cone_machine(label, cone),
    }
}

pub fn print_gale(g: &DegreeMatrix, format: Format) {
    match format {
        Format::Human => {
            println!("group: {}", g.group());
            for (name, d) in g.names().iter().zip(g.degrees()) {
                println!("deg {name} = {}", fmt_degree(d));
            }
        }
        Format::Machine => {
            println!("group.rank = {}", g.group().rank());
            let tors: Vec<BigInt> = g.group().torsion().to_vec();
            println!("group.torsion = {}", fmt_array(&tors));
            println!("degree.count = {}", g.num_vars());
            for (i, d) in g.degrees().iter().enumerate() {
                println!("degree.{i} = {}", fmt_array(d.free_part()));
            }
        }
    }
}

pub fn print_fan(fan: &Fan, format: Format) {
    match format {
        Format::Human => {
            println!(
                "fan in Z^{} with {} rays and {} maximal cones",
                fan.lattice_dim(),
                fan.rays().len(),
                fan.max_cones().len()
            );
            for (i, r) in fan.rays().iter().enumerate() {
                println!("ray {i} = {}", fmt_tuple(r));
            }
            for c in fan.max_cones() {
                let idx: Vec<String> = c.iter().map(|i| i.to_string()).collect();
                println!("cone {{{}}}", idx.join(", "));
            }
            let unused = fan.unused_ray_indices();
            println!(
                "unused rays: {}",
                if unused.is_empty() {
                    "none".to_string()
                } else {
                    unused
                        .iter()
                        .map(|i| i.to_string())
                        .collect::<Vec<_>>()
                        .join(", ")
                }
            );
        }
        Format::Machine => {
            println!("dim = {}", fan.lattice_dim());
            println!("ray.count = {}", fan.rays().len());
            for (i, r) in fan.rays().iter().enumerate() {
                println!("ray.{i} = {}", fmt_array(r));
            }
            println!("cone.count = {}", fan.max_cones().len());
            for (i, c) in fan.max_cones().iter().enumerate() {
                println!("cone.{i} = {}", fmt_index_array(c));
            }
            println!("unused = {}", fmt_index_array(&fan.unused_ray_indices()));
        }
    }
}

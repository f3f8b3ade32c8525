//! Flag grammar and dispatch. Every command reads files in the canonical
//! text format and writes to `--out` or standard output; diagnostics go to
//! standard error. Exit codes: 0 success or positive verdict, 1 valid
//! input with a negative verdict, 2 input or usage error.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use orthokit_core::amalgam::{amalgamate, verify_strong, AmalgamError, VFormation};
use orthokit_core::axioms::{check_orthogroupoid, is_zero_commutative, lemma_suite};
use orthokit_core::church::ChurchGroupoid;
use orthokit_core::decomp::{binary_decompose, full_decompose, verify_decomposition, Decomposition};
use orthokit_core::enumerate::{
    canonical_form, canonical_form_system, enumerate_orthogroupoids,
    enumerate_orthogroupoids_partition, enumerate_orthosystems, enumerate_orthosystems_partition,
    groupoid_partition_count, system_partition_count, CanonicalForm, Dedup, SearchSpec,
    SOFT_SIZE_LIMIT,
};
use orthokit_core::induce::{induce_groupoids, induced_relation, ChoicePolicy, ChoiceRule};
use orthokit_core::relsys::{check_orthogonal_system, relation_flags};
use orthokit_core::{CheckReport, Groupoid, RelationalSystem};

use crate::format::{parse, serialize_groupoid, serialize_system, Document};
use crate::render::{groupoid_names, report_json, report_text, system_names};

#[derive(Parser)]
#[command(
    name = "orthokit",
    version,
    about = "Finite orthogonal relational systems and the groupoids they induce"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Validate a structure file and run the axiom checks for its kind.
    Check {
        file: PathBuf,
        /// Also run the derived-law suite (groupoid files only).
        #[arg(long)]
        lemmas: bool,
        /// Emit the report as JSON instead of text lines.
        #[arg(long)]
        json: bool,
    },
    /// Print the relation property flags of a relational system.
    Props {
        file: PathBuf,
        /// Emit the report as JSON instead of text lines.
        #[arg(long)]
        json: bool,
    },
    /// Build the groupoid(s) a relational system induces.
    Induce {
        file: PathBuf,
        /// One groupoid per combination of choices, not just least-index.
        #[arg(long)]
        all: bool,
        /// Directory for the induced groupoid files.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the relation a groupoid induces: (x,y) related iff x+y = y.
    Relate { file: PathBuf },
    /// Print the central elements and the center's tables.
    Center { file: PathBuf },
    /// Split a groupoid into direct factors along central elements.
    Decompose {
        file: PathBuf,
        /// Central element to split at, giving two factors.
        #[arg(long, conflicts_with = "full")]
        at: Option<String>,
        /// Split along every center atom (the default).
        #[arg(long)]
        full: bool,
        /// Directory for the factor files and the map table.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Glue two groupoids over a shared subalgebra.
    Amalgamate {
        /// The shared base algebra.
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b1: PathBuf,
        #[arg(long)]
        b2: PathBuf,
        /// Map file embedding the base into --b1, lines of "element image".
        #[arg(long)]
        i: PathBuf,
        /// Map file embedding the base into --b2.
        #[arg(long)]
        j: PathBuf,
        /// Directory for the glued algebra and its two embedding maps.
        #[arg(long)]
        out: PathBuf,
    },
    /// Stream every model of a given size.
    Enumerate {
        #[arg(long)]
        size: usize,
        /// Relational systems instead of groupoids.
        #[arg(long)]
        relsys: bool,
        /// Require x+0 = 0+x (groupoids only).
        #[arg(long, conflicts_with = "relsys")]
        zero_comm: bool,
        /// One representative per isomorphism class.
        #[arg(long)]
        up_to_iso: bool,
        /// Print only the number of models.
        #[arg(long)]
        count_only: bool,
        /// Directory for one file per model.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads; the output is identical for any value.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

pub fn run(cli: Cli) -> i32 {
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            2
        }
    }
}

/// `Err` is an input problem (exit 2); negative verdicts return `Ok(1)`
/// after printing their own diagnostics.
fn dispatch(command: Command) -> Result<i32, String> {
    match command {
        Command::Check { file, lemmas, json } => check_cmd(&file, lemmas, json),
        Command::Props { file, json } => props_cmd(&file, json),
        Command::Induce { file, all, out } => induce_cmd(&file, all, out.as_deref()),
        Command::Relate { file } => relate_cmd(&file),
        Command::Center { file } => center_cmd(&file),
        Command::Decompose { file, at, full, out } => {
            decompose_cmd(&file, at.as_deref(), full, out.as_deref())
        }
        Command::Amalgamate { a, b1, b2, i, j, out } => {
            amalgamate_cmd(&a, &b1, &b2, &i, &j, &out)
        }
        Command::Enumerate { size, relsys, zero_comm, up_to_iso, count_only, out, jobs } => {
            enumerate_cmd(size, relsys, zero_comm, up_to_iso, count_only, out.as_deref(), jobs)
        }
    }
}

fn read_doc(path: &Path) -> Result<Document, String> {
    let text =
        fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_groupoid(path: &Path) -> Result<Groupoid, String> {
    match read_doc(path)? {
        Document::Groupoid(g) => Ok(g),
        Document::System(_) => {
            Err(format!("{}: expected `kind groupoid`", path.display()))
        }
    }
}

fn read_system(path: &Path) -> Result<RelationalSystem, String> {
    match read_doc(path)? {
        Document::System(s) => Ok(s),
        Document::Groupoid(_) => Err(format!("{}: expected `kind relsys`", path.display())),
    }
}

fn write_file(dir: &Path, name: &str, content: &str) -> Result<(), String> {
    let path = dir.join(name);
    fs::write(&path, content).map_err(|e| format!("{}: {e}", path.display()))
}

fn print_report(report: &CheckReport, names: &[String], json: bool) {
    if json {
        println!("{}", serde_json::to_string_pretty(&report_json(report, names)).unwrap());
    } else {
        print!("{}", report_text(report, names));
    }
}

fn check_cmd(file: &Path, lemmas: bool, json: bool) -> Result<i32, String> {
    let (report, names) = match read_doc(file)? {
        Document::Groupoid(g) => {
            let mut report = g.validate();
            report.extend(check_orthogroupoid(&g).to_report());
            if lemmas {
                report.extend(lemma_suite(&g));
                report.push_outcome("zero_commutative", is_zero_commutative(&g));
            }
            (report, groupoid_names(&g))
        }
        Document::System(s) => {
            if lemmas {
                return Err("--lemmas applies to groupoid files".to_string());
            }
            let mut report = s.validate();
            report.extend(check_orthogonal_system(&s));
            (report, system_names(&s))
        }
    };
    print_report(&report, &names, json);
    Ok(if report.passed() { 0 } else { 1 })
}

fn props_cmd(file: &Path, json: bool) -> Result<i32, String> {
    let s = read_system(file)?;
    let report = relation_flags(&s).to_report();
    print_report(&report, &system_names(&s), json);
    Ok(0)
}

fn induce_cmd(file: &Path, all: bool, out: Option<&Path>) -> Result<i32, String> {
    let s = read_system(file)?;
    let policy = if all { ChoicePolicy::EnumerateAll } else { ChoicePolicy::MinIndex };
    let induction = match induce_groupoids(&s, policy) {
        Ok(induction) => induction,
        Err(e) => {
            eprintln!("induce: {e}");
            return Ok(1);
        }
    };

    let mut header = String::new();
    for cp in &induction.choice_points {
        let rule = match cp.rule {
            ChoiceRule::Cone => "cone-choice",
            ChoiceRule::Supremal => "supremal-choice",
        };
        header.push_str(&format!(
            "# choicepoint {} {} {rule} candidates",
            s.name(cp.pair.0),
            s.name(cp.pair.1)
        ));
        for c in cp.candidates.iter() {
            header.push(' ');
            header.push_str(s.name(c));
        }
        header.push('\n');
    }
    for &(x, y) in &induction.overlaps {
        header.push_str(&format!("# overlap {} {}\n", s.name(x), s.name(y)));
    }

    if let Some(dir) = out {
        fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    }
    for (g, choices) in induction.groupoids.iter().zip(&induction.choices) {
        let stem: String = std::iter::once("induced".to_string())
            .chain(choices.iter().map(|c| c.to_string()))
            .collect::<Vec<_>>()
            .join("-");
        let mut content = header.clone();
        if !choices.is_empty() {
            let digits: Vec<String> = choices.iter().map(|c| c.to_string()).collect();
            content.push_str(&format!("# choices {}\n", digits.join(" ")));
        }
        content.push_str(&serialize_groupoid(g));
        match out {
            Some(dir) => {
                let name = format!("{stem}.ok");
                write_file(dir, &name, &content)?;
                println!("{name}");
            }
            None => {
                println!("# {stem}");
                print!("{content}");
                println!();
            }
        }
    }
    Ok(0)
}

fn relate_cmd(file: &Path) -> Result<i32, String> {
    let g = read_groupoid(file)?;
    print!("{}", serialize_system(&induced_relation(&g)));
    Ok(0)
}

fn center_cmd(file: &Path) -> Result<i32, String> {
    let g = read_groupoid(file)?;
    let ch = match ChurchGroupoid::new(&g) {
        Ok(ch) => ch,
        Err(e) => {
            eprintln!("center: {e}");
            return Ok(1);
        }
    };
    let center = match ch.center() {
        Ok(center) => center,
        Err(e) => {
            eprintln!("center: {e}");
            return Ok(1);
        }
    };

    let row = |elems: &[usize]| {
        elems.iter().map(|&x| g.name(x)).collect::<Vec<_>>().join(" ")
    };
    println!("central {}", row(center.elements()));
    println!("atoms {}", row(&center.atoms()));
    println!("zero {}", g.name(center.zero()));
    println!("top {}", g.name(center.top()));
    println!("join");
    for &x in center.elements() {
        let cells: Vec<usize> =
            center.elements().iter().map(|&y| center.join_of(x, y)).collect();
        println!("{}", row(&cells));
    }
    println!("meet");
    for &x in center.elements() {
        let cells: Vec<usize> =
            center.elements().iter().map(|&y| center.meet_of(x, y)).collect();
        println!("{}", row(&cells));
    }
    let compl: Vec<usize> = center.elements().iter().map(|&x| center.compl_of(x)).collect();
    println!("compl {}", row(&compl));
    Ok(0)
}

fn decompose_cmd(
    file: &Path,
    at: Option<&str>,
    _full: bool,
    out: Option<&Path>,
) -> Result<i32, String> {
    let g = read_groupoid(file)?;
    let ch = match ChurchGroupoid::new(&g) {
        Ok(ch) => ch,
        Err(e) => {
            eprintln!("decompose: {e}");
            return Ok(1);
        }
    };
    let result = match at {
        Some(name) => {
            let e = (0..g.size())
                .find(|&i| g.name(i) == name)
                .ok_or_else(|| format!("unknown element `{name}`"))?;
            binary_decompose(&ch, e)
        }
        None => full_decompose(&ch),
    };
    let d: Decomposition = match result {
        Ok(d) => d,
        Err(e) => {
            eprintln!("decompose: {e}");
            return Ok(1);
        }
    };

    let mut map_table = String::from("map\n");
    for x in 0..g.size() {
        map_table.push_str(g.name(x));
        for (k, factor) in d.factors.iter().enumerate() {
            map_table.push(' ');
            map_table.push_str(factor.name(d.map[x][k]));
        }
        map_table.push('\n');
    }

    match out {
        Some(dir) => {
            fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
            for (k, factor) in d.factors.iter().enumerate() {
                let name = format!("factor-{k}.ok");
                write_file(dir, &name, &serialize_groupoid(factor))?;
                println!("{name}");
            }
            write_file(dir, "map.txt", &map_table)?;
            println!("map.txt");
        }
        None => {
            for (k, factor) in d.factors.iter().enumerate() {
                println!("# factor {k}");
                print!("{}", serialize_groupoid(factor));
                println!();
            }
            print!("{map_table}");
        }
    }

    let verification = verify_decomposition(&g, &d);
    if verification.passed() {
        Ok(0)
    } else {
        eprint!("{}", report_text(&verification, &groupoid_names(&g)));
        Ok(1)
    }
}

/// Map files hold one `element image` pair per line, `#` comments and
/// blank lines allowed; every element of `from` must appear exactly once.
fn read_map(path: &Path, from: &Groupoid, to: &Groupoid) -> Result<Vec<usize>, String> {
    let text =
        fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let mut map = vec![usize::MAX; from.size()];
    for (idx, raw) in text.lines().enumerate() {
        let at = |msg: String| format!("{}: line {}: {msg}", path.display(), idx + 1);
        let tokens: Vec<&str> =
            raw.split('#').next().unwrap_or("").split_whitespace().collect();
        match tokens[..] {
            [] => {}
            [elem, image] => {
                let x = (0..from.size())
                    .find(|&i| from.name(i) == elem)
                    .ok_or_else(|| at(format!("unknown element `{elem}`")))?;
                let y = (0..to.size())
                    .find(|&i| to.name(i) == image)
                    .ok_or_else(|| at(format!("unknown image `{image}`")))?;
                if map[x] != usize::MAX {
                    return Err(at(format!("element `{elem}` mapped twice")));
                }
                map[x] = y;
            }
            _ => return Err(at("expected `element image`".to_string())),
        }
    }
    if let Some(x) = (0..from.size()).find(|&x| map[x] == usize::MAX) {
        return Err(format!("{}: element `{}` has no image", path.display(), from.name(x)));
    }
    Ok(map)
}

/// Witnesses of formation and strongness checks index different carriers;
/// pick the right one per check name.
fn print_mixed_report(report: &CheckReport, names_for: impl Fn(&str) -> Vec<String>) {
    for check in &report.checks {
        let mut single = CheckReport::new();
        single.push(check.clone());
        print!("{}", report_text(&single, &names_for(check.name)));
    }
}

fn amalgamate_cmd(
    a: &Path,
    b1: &Path,
    b2: &Path,
    i: &Path,
    j: &Path,
    out: &Path,
) -> Result<i32, String> {
    let a = read_groupoid(a)?;
    let b1 = read_groupoid(b1)?;
    let b2 = read_groupoid(b2)?;
    let i = read_map(i, &a, &b1)?;
    let j = read_map(j, &a, &b2)?;
    let vf = VFormation { a, b1, b2, i, j };

    let am = match amalgamate(&vf) {
        Ok(am) => am,
        Err(AmalgamError::InvalidVFormation(report)) => {
            print_mixed_report(&report, |check| {
                groupoid_names(match check {
                    "b1_is_orthogroupoid" => &vf.b1,
                    "b2_is_orthogroupoid" => &vf.b2,
                    _ => &vf.a,
                })
            });
            return Ok(1);
        }
        Err(e) => {
            eprintln!("amalgamate: {e}");
            return Ok(1);
        }
    };

    fs::create_dir_all(out).map_err(|e| format!("{}: {e}", out.display()))?;
    write_file(out, "d.ok", &serialize_groupoid(&am.d))?;
    for (name, side, map) in [("h.map", &vf.b1, &am.h), ("k.map", &vf.b2, &am.k)] {
        let mut text = String::new();
        for x in 0..side.size() {
            text.push_str(&format!("{} {}\n", side.name(x), am.d.name(map[x])));
        }
        write_file(out, name, &text)?;
    }
    println!("d.ok");
    println!("h.map");
    println!("k.map");

    let report = verify_strong(&vf, &am);
    print_mixed_report(&report, |check| {
        groupoid_names(match check {
            "h_embedding" => &vf.b1,
            "k_embedding" => &vf.b2,
            "square_commutes" => &vf.a,
            _ => &am.d,
        })
    });
    Ok(if report.passed() { 0 } else { 1 })
}

enum Stream {
    Groupoids(Vec<Groupoid>),
    Systems(Vec<RelationalSystem>),
}

fn enumerate_cmd(
    size: usize,
    relsys: bool,
    zero_comm: bool,
    up_to_iso: bool,
    count_only: bool,
    out: Option<&Path>,
    jobs: usize,
) -> Result<i32, String> {
    if size == 0 || size > SOFT_SIZE_LIMIT {
        return Err(format!("--size must be between 1 and {SOFT_SIZE_LIMIT}"));
    }
    if jobs == 0 {
        return Err("--jobs must be at least 1".to_string());
    }
    let mut spec = SearchSpec::new(size);
    spec.zero_commutative = zero_comm;
    spec.dedup = if up_to_iso { Dedup::UpToIso } else { Dedup::Labelled };

    let stream = if relsys {
        Stream::Systems(collect_parallel(
            &spec,
            jobs,
            system_partition_count,
            enumerate_orthosystems,
            enumerate_orthosystems_partition,
            canonical_form_system,
        ))
    } else {
        Stream::Groupoids(collect_parallel(
            &spec,
            jobs,
            groupoid_partition_count,
            enumerate_orthogroupoids,
            enumerate_orthogroupoids_partition,
            canonical_form,
        ))
    };

    let (len, docs): (usize, Box<dyn Iterator<Item = String>>) = match stream {
        Stream::Groupoids(models) => (
            models.len(),
            Box::new(models.into_iter().map(|g| serialize_groupoid(&g))),
        ),
        Stream::Systems(models) => (
            models.len(),
            Box::new(models.into_iter().map(|s| serialize_system(&s))),
        ),
    };

    if count_only {
        println!("{len}");
        return Ok(0);
    }
    match out {
        Some(dir) => {
            fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
            for (idx, doc) in docs.enumerate() {
                write_file(dir, &format!("model-{idx:06}.ok", idx = idx), &doc)?;
            }
            println!("{len}");
        }
        None => {
            for (idx, doc) in docs.enumerate() {
                println!("# model {idx}");
                print!("{doc}");
                println!();
            }
        }
    }
    Ok(0)
}

/// Runs the partitioned search on `jobs` threads and merges in partition
/// order, so the stream is identical to a sequential run. Isomorphism
/// dedup happens after the merge, keeping the first representative.
fn collect_parallel<M: Send>(
    spec: &SearchSpec,
    jobs: usize,
    partition_count: fn(&SearchSpec) -> usize,
    sequential: fn(&SearchSpec) -> Vec<M>,
    partition: fn(&SearchSpec, usize) -> Vec<M>,
    canon: fn(&M) -> CanonicalForm,
) -> Vec<M> {
    if jobs == 1 {
        return sequential(spec);
    }
    let mut labelled = spec.clone();
    labelled.dedup = Dedup::Labelled;
    let parts = partition_count(&labelled);
    let mut slices: Vec<Vec<M>> = (0..parts).map(|_| Vec::new()).collect();
    std::thread::scope(|scope| {
        let mut pending: Vec<(usize, &mut Vec<M>)> = slices.iter_mut().enumerate().collect();
        for worker in 0..jobs.min(parts) {
            let mine: Vec<(usize, &mut Vec<M>)> = pending
                .extract_if(.., |(p, _)| *p % jobs == worker)
                .collect();
            let labelled = &labelled;
            scope.spawn(move || {
                for (p, slot) in mine {
                    *slot = partition(labelled, p);
                }
            });
        }
    });
    let merged: Vec<M> = slices.into_iter().flatten().collect();
    if matches!(spec.dedup, Dedup::Labelled) {
        return merged;
    }
    let mut seen = std::collections::BTreeSet::new();
    merged.into_iter().filter(|m| seen.insert(canon(m))).collect()
}

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use cnlqa::cli::{
    answer_batch, audit, group_by_template, load_kb, lvp_stats, parse_questions, read_file, render_stats, write_file,
    CliError, Resources,
};
use cnlqa::learner::{Annotation, LvpStore};

#[derive(Parser)]
#[command(name = "cnlqa", version, about = "Controlled-English question answering over a movie knowledge base")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct DataArgs {
    /// Lexicon table replacing the bundled one
    #[arg(long)]
    lexicon: Option<PathBuf>,
    /// Frame definitions
    #[arg(long)]
    frames: Option<PathBuf>,
    /// Role to entity-class map
    #[arg(long)]
    roles: Option<PathBuf>,
    /// Common-noun classes
    #[arg(long)]
    nouns: Option<PathBuf>,
    /// Learned lvps
    #[arg(long)]
    lvps: Option<PathBuf>,
    /// Background rules, one if-then sentence per line
    #[arg(long)]
    rules: Option<PathBuf>,
}

impl DataArgs {
    fn resources(&self) -> Resources {
        Resources {
            lexicon: self.lexicon.clone(),
            frames: self.frames.clone(),
            role_map: self.roles.clone(),
            nouns: self.nouns.clone(),
            lvps: self.lvps.clone(),
            rules: self.rules.clone(),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Load a triple file and summarize the films it defines
    Ingest {
        #[arg(long)]
        kb: PathBuf,
    },
    /// Learn lvps from annotated sentences
    Learn {
        #[arg(long)]
        annotations: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        data: DataArgs,
    },
    /// Print the DRS, candidate parses and query of a sentence
    Parse {
        sentence: String,
        /// Fact base whose entities are used for disambiguation
        #[arg(long)]
        kb: Option<PathBuf>,
        #[command(flatten)]
        data: DataArgs,
    },
    /// Answer a file of questions
    Answer {
        #[arg(long)]
        questions: PathBuf,
        #[arg(long)]
        kb: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        data: DataArgs,
    },
    /// Compare labeled answers with computed ones
    Audit {
        #[arg(long)]
        questions: PathBuf,
        #[arg(long)]
        kb: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
        #[command(flatten)]
        data: DataArgs,
    },
    /// Group questions by query template
    Templates {
        #[arg(long)]
        questions: PathBuf,
        #[arg(long)]
        kb: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        data: DataArgs,
    },
    /// Count lvps per pair of frame roles
    Stats {
        #[arg(long)]
        lvps: Option<PathBuf>,
        #[arg(long)]
        frames: Option<PathBuf>,
    },
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(p) => write_file(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Ingest { kb } => {
            let facts = load_kb(&kb)?;
            let mut titles: Vec<&str> = facts.films().iter().map(|f| f.name.as_str()).collect();
            titles.sort_unstable();
            titles.dedup();
            let shared = titles.iter().filter(|t| facts.ids_named(t).len() > 1).count();
            println!("films\t{}", facts.films().len());
            println!("facts\t{}", facts.facts().count());
            println!("titles\t{}", titles.len());
            println!("shared titles\t{shared}");
        }
        Command::Learn { annotations, out, data } => {
            let text = read_file(&annotations)?;
            let anns = Annotation::parse_file(&text).map_err(|e| CliError::file(&annotations, e))?;
            let pipeline = data.resources().pipeline(None)?;
            let mut store = LvpStore::new();
            let mut failed = 0;
            for a in &anns {
                if let Err(e) = store.learn(a, &pipeline.paraphraser) {
                    eprintln!("{a}: {e}");
                    failed += 1;
                }
            }
            emit(out.as_deref(), &store.to_text())?;
            if failed > 0 {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Parse { sentence, kb, data } => {
            let facts = kb.as_deref().map(load_kb).transpose()?;
            let pipeline = data.resources().pipeline(facts.as_ref())?;
            let analysis = match pipeline.analyze(&sentence) {
                Ok(a) => a,
                Err(e) => {
                    eprintln!("{}: {e}", e.kind());
                    return Ok(ExitCode::from(1));
                }
            };
            print!("{}", analysis.drs.render());
            println!();
            for p in pipeline.valid_parses(&analysis) {
                println!("{p}");
            }
            if let Ok(q) = pipeline.query_of(&analysis) {
                println!("\n{q}");
            }
        }
        Command::Answer { questions, kb, out, data } => {
            let facts = load_kb(&kb)?;
            let res = data.resources();
            let pipeline = res.pipeline(Some(&facts))?;
            let rules = res.rules(&pipeline)?;
            let qs = parse_questions(&read_file(&questions)?);
            emit(out.as_deref(), &answer_batch(&qs, &pipeline, &facts, &rules))?;
        }
        Command::Audit { questions, kb, report, data } => {
            let facts = load_kb(&kb)?;
            let res = data.resources();
            let pipeline = res.pipeline(Some(&facts))?;
            let rules = res.rules(&pipeline)?;
            let qs = parse_questions(&read_file(&questions)?);
            emit(report.as_deref(), &audit(&qs, &pipeline, &facts, &rules).render())?;
        }
        Command::Templates { questions, kb, out, data } => {
            let facts = kb.as_deref().map(load_kb).transpose()?;
            let pipeline = data.resources().pipeline(facts.as_ref())?;
            let qs = parse_questions(&read_file(&questions)?);
            emit(out.as_deref(), &group_by_template(&qs, &pipeline).render())?;
        }
        Command::Stats { lvps, frames } => {
            let res = Resources {
                lvps,
                frames,
                ..Resources::default()
            };
            let pipeline = res.pipeline(None)?;
            print!("{}", render_stats(&lvp_stats(&pipeline.lvps, &pipeline.ontology)));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

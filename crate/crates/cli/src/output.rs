//! Output envelope and the three renderings of each command's result.

use std::io::{self, Write};

use clap::ValueEnum;
use serde::Serialize;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Debug, Serialize)]
pub struct Envelope<I: Serialize, R: Serialize> {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub input_echo: I,
    pub result: R,
    pub exact: bool,
}

/// A command's result, pre-rendered for every output format.
pub struct Rendered {
    pub json: serde_json::Value,
    pub csv_header: Vec<&'static str>,
    pub csv_rows: Vec<Vec<String>>,
    pub plain: String,
}

impl Rendered {
    pub fn new<I: Serialize, R: Serialize>(
        command: &'static str,
        input_echo: I,
        result: R,
        exact: bool,
    ) -> Self {
        let envelope = Envelope {
            schema_version: SCHEMA_VERSION,
            command,
            input_echo,
            result,
            exact,
        };
        Rendered {
            json: serde_json::to_value(&envelope).expect("envelope serializes"),
            csv_header: Vec::new(),
            csv_rows: Vec::new(),
            plain: String::new(),
        }
    }

    pub fn csv(mut self, header: Vec<&'static str>, rows: Vec<Vec<String>>) -> Self {
        self.csv_header = header;
        self.csv_rows = rows;
        self
    }

    pub fn plain(mut self, text: String) -> Self {
        self.plain = text;
        self
    }

    pub fn write_to(&self, format: Format, out: &mut impl Write) -> io::Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer(&mut *out, &self.json)?;
                writeln!(out)
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(&mut *out);
                w.write_record(&self.csv_header)?;
                for row in &self.csv_rows {
                    w.write_record(row)?;
                }
                w.flush()
            }
            Format::Plain => {
                out.write_all(self.plain.as_bytes())?;
                if !self.plain.ends_with('\n') {
                    writeln!(out)?;
                }
                Ok(())
            }
        }
    }
}

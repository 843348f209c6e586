use std::fmt::Write as _;

/// Human-readable lines followed by a `key=value` block.
#[derive(Default)]
pub struct Report {
    lines: Vec<String>,
    values: Vec<(String, String)>,
}

impl Report {
    pub fn line(&mut self, text: impl Into<String>) -> &mut Self {
        self.lines.push(text.into());
        self
    }

    pub fn value(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.values.push((key.to_string(), value.to_string()));
        self
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for l in &self.lines {
            writeln!(out, "{l}").unwrap();
        }
        if !self.values.is_empty() {
            out.push_str("--\n");
            for (k, v) in &self.values {
                writeln!(out, "{k}={v}").unwrap();
            }
        }
        out
    }
}

pub fn join(vs: &[usize]) -> String {
    vs.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

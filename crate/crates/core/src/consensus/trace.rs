use std::io::Write;

use super::ConsensusState;
use crate::error::Result;

/// Per-iteration CSV trace with columns `k,i,x,alpha,q`.
pub struct TraceWriter<W: Write> {
    inner: csv::Writer<W>,
}

impl<W: Write> TraceWriter<W> {
    pub fn new(writer: W) -> Result<Self> {
        let mut inner = csv::Writer::from_writer(writer);
        inner.write_record(["k", "i", "x", "alpha", "q"])?;
        Ok(Self { inner })
    }

    /// Appends one row per node for the state's current iteration.
    pub fn record(&mut self, state: &ConsensusState) -> Result<()> {
        let k = state.iteration().to_string();
        let q = state.quantized();
        for (i, x) in state.x().iter().enumerate() {
            self.inner.write_record([
                k.as_str(),
                &i.to_string(),
                &x.to_string(),
                &state.alpha(i).to_string(),
                &q[i].to_string(),
            ])?;
        }
        Ok(())
    }

    pub fn finish(mut self) -> Result<W> {
        self.inner.flush()?;
        self.inner.into_inner().map_err(|e| crate::error::Error::Io(e.into_error()))
    }
}

#pragma once

#include <string>
#include <vector>

#include "jetpoisson/poisson.hpp"
#include "jetpoisson/setup_file.hpp"

namespace jetpoisson {

/**
 * Built-in regression problems with locked verdicts.  The same texts are
 * shipped under corpus/ for the command line; the embedded copies keep the
 * expected outcomes next to the inputs so the suite runs from the binary
 * alone.
 */
struct CorpusEntry {
    std::string name;
    std::string text;
    Verdict expected;
};

const std::vector<CorpusEntry>& corpus_entries();

// nullptr when the name is not a corpus problem
const CorpusEntry* find_corpus_entry(const std::string& name);

struct CorpusResult {
    std::string name;
    std::string digest;
    Verdict expected = Verdict::inconclusive;
    HamiltonianReport report;
    bool ok = false;  // verdict matches the locked expectation
};

CorpusResult run_corpus_entry(const CorpusEntry& entry);

std::vector<CorpusResult> run_corpus();

}  // namespace jetpoisson

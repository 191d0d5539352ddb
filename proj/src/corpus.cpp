#include "jetpoisson/corpus.hpp"

namespace jetpoisson {

const std::vector<CorpusEntry>& corpus_entries() {
    static const std::vector<CorpusEntry> entries = {
        {"translation",
         "# translation flow: the simplest constant-coefficient structure\n"
         "[signature]\n"
         "independent = x\n"
         "dependent = u\n"
         "\n"
         "[operator translation]\n"
         "matrix = D\n",
         Verdict::hamiltonian},
        {"kdv2",
         "# second KdV structure\n"
         "[signature]\n"
         "independent = x\n"
         "dependent = u\n"
         "\n"
         "[operator kdv2]\n"
         "matrix = D^3 + 2/3*u*D + 1/3*u_x\n",
         Verdict::hamiltonian},
        {"current",
         "# u*D + D*u halved, the current-algebra operator\n"
         "[signature]\n"
         "independent = x\n"
         "dependent = u\n"
         "\n"
         "[operator current]\n"
         "matrix = u*D + 1/2*u_x\n",
         Verdict::hamiltonian},
        {"nonham",
         "# skew but fails Jacobi: the coefficient sits one jet order too high\n"
         "[signature]\n"
         "independent = x\n"
         "dependent = u\n"
         "\n"
         "[operator nonham]\n"
         "matrix = u_x*D + 1/2*u[2]\n",
         Verdict::not_hamiltonian},
        {"offdiag2",
         "# two components coupled through an off-diagonal derivative\n"
         "[signature]\n"
         "independent = x\n"
         "dependent = u, v\n"
         "\n"
         "[operator offdiag2]\n"
         "matrix = [[0, D], [D, 0]]\n",
         Verdict::hamiltonian},
    };
    return entries;
}

const CorpusEntry* find_corpus_entry(const std::string& name) {
    for (const auto& entry : corpus_entries())
        if (entry.name == name) return &entry;
    return nullptr;
}

CorpusResult run_corpus_entry(const CorpusEntry& entry) {
    SetupFile setup = parse_setup(entry.text);
    CorpusResult result;
    result.name = entry.name;
    result.digest = setup_digest(setup);
    result.expected = entry.expected;
    if (setup.operators.size() != 1)
        throw std::runtime_error("corpus entry '" + entry.name + "' must define exactly one operator");
    PoissonSetup problem(setup.sig, setup.operators.front().op);
    result.report = classify(problem, setup.options.max_degree, setup.options.max_order);
    result.ok = result.report.verdict == entry.expected;
    return result;
}

std::vector<CorpusResult> run_corpus() {
    std::vector<CorpusResult> out;
    out.reserve(corpus_entries().size());
    for (const auto& entry : corpus_entries()) out.push_back(run_corpus_entry(entry));
    return out;
}

}  // namespace jetpoisson

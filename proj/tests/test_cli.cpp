#include "doctest.h"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

// End-to-end checks of the command-line tool. PDBG_BIN is injected by the
// build; commands run through the shell so the piped usage is exercised
// exactly as documented.

namespace {

namespace fs = std::filesystem;

struct Scratch {
    fs::path dir;
    Scratch() {
        dir = fs::temp_directory_path() /
              ("pdbg_cli_test_" + std::to_string(static_cast<unsigned>(::getpid())));
        fs::create_directories(dir);
    }
    ~Scratch() { std::error_code ec; fs::remove_all(dir, ec); }
    std::string path(const std::string& name) const { return (dir / name).string(); }
};

int run(const std::string& cmd) {
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const std::string bin = PDBG_BIN;

}  // namespace

TEST_CASE("gen | reduce | solve pipeline answers yes on K3") {
    Scratch s;
    std::string out = s.path("answer.txt");
    int rc = run(bin + " gen --family k3 | " + bin + " reduce --stage pdbg | " + bin +
                 " solve --covering > " + out);
    CHECK(rc == 0);
    CHECK(slurp(out) == "SOUND-CYCLE: yes\n");
}

TEST_CASE("negative instance exits 1 with a no") {
    Scratch s;
    // K_{1,3} has no hamiltonian path; its gadget has no sound cycle.
    std::ofstream(s.path("star.ug")) << "ugraph 1\nn 4\nedge 1 2\nedge 2 3\nedge 2 4\n";
    std::string out = s.path("answer.txt");
    int rc = run(bin + " reduce --stage pdbg " + s.path("star.ug") + " | " + bin +
                 " solve > " + out);
    CHECK(rc == 1);
    CHECK(slurp(out) == "SOUND-CYCLE: no\n");
}

TEST_CASE("witness then verify round-trips as VALID") {
    Scratch s;
    std::ofstream(s.path("k3.hc")) << "hamcycle 1\norder 1 2 3\n";
    CHECK(run(bin + " gen --family k3 -o " + s.path("k3.ug")) == 0);
    CHECK(run(bin + " reduce --stage pdbg " + s.path("k3.ug") + " -o " + s.path("k3.pdbg")) ==
          0);
    CHECK(run(bin + " witness " + s.path("k3.ug") + " " + s.path("k3.hc") + " -o " +
              s.path("k3.cyc")) == 0);
    std::string out = s.path("verdict.txt");
    CHECK(run(bin + " verify " + s.path("k3.pdbg") + " " + s.path("k3.cyc") +
              " --covering > " + out) == 0);
    CHECK(slurp(out) == "VALID\n");

    // Tampering with the shift must flip the verdict.
    CHECK(run(bin + " verify " + s.path("k3.pdbg") + " " + s.path("k3.cyc") +
              " --d 3 > " + out) == 1);
}

TEST_CASE("witness --stage pipeline verifies against reduce --stage pipeline") {
    Scratch s;
    std::ofstream(s.path("k3.hc")) << "hamcycle 1\norder 1 2 3\n";
    CHECK(run(bin + " gen --family k3 -o " + s.path("k3.ug")) == 0);
    CHECK(run(bin + " reduce --stage pipeline " + s.path("k3.ug") + " -o " +
              s.path("pipe.pdbg")) == 0);
    CHECK(run(bin + " witness --stage pipeline " + s.path("k3.ug") + " " + s.path("k3.hc") +
              " -o " + s.path("pipe.cyc")) == 0);
    std::string out = s.path("verdict.txt");
    CHECK(run(bin + " verify " + s.path("pipe.pdbg") + " " + s.path("pipe.cyc") +
              " --covering > " + out) == 0);
    CHECK(slurp(out) == "VALID\n");
}

TEST_CASE("witness and verify work at k=0 through files") {
    Scratch s;
    std::ofstream(s.path("k0.pdbg"))
        << "pdbg 1\nk 0\nalphabet x y\nvertex v - -\nedge v v x y\nedge v v y x\nd 1\n";
    CHECK(run(bin + " solve --engine exact --covering --witness-out " + s.path("w.cyc") +
              " " + s.path("k0.pdbg") + " > /dev/null") == 0);
    CHECK(slurp(s.path("w.cyc")).find("eb ") != std::string::npos);
    std::string out = s.path("verdict.txt");
    CHECK(run(bin + " verify " + s.path("k0.pdbg") + " " + s.path("w.cyc") + " > " + out) ==
          0);
    CHECK(slurp(out) == "VALID\n");
}

TEST_CASE("solve with witness-out emits a verifiable cycle file") {
    Scratch s;
    CHECK(run(bin + " gen --family k3 | " + bin + " reduce --stage pdbg -o " +
              s.path("k3.pdbg")) == 0);
    CHECK(run(bin + " solve --covering --witness-out " + s.path("w.cyc") + " " +
              s.path("k3.pdbg") + " > /dev/null") == 0);
    std::string out = s.path("verdict.txt");
    CHECK(run(bin + " verify " + s.path("k3.pdbg") + " " + s.path("w.cyc") + " > " + out) ==
          0);
    CHECK(slurp(out) == "VALID\n");
}

TEST_CASE("validate reports violations and exit code 1") {
    Scratch s;
    std::ofstream(s.path("bad.pdbg"))
        << "pdbg 1\nk 1\nalphabet a b\nvertex u a b\nvertex w a b\nd 0\n";
    std::string out = s.path("report.txt");
    CHECK(run(bin + " validate " + s.path("bad.pdbg") + " > " + out) == 1);
    CHECK(slurp(out).find("duplicate vertex bilabel") != std::string::npos);

    std::ofstream(s.path("ok.pdbg"))
        << "pdbg 1\nk 1\nalphabet a\nvertex u a a\nedge u u\nd 1\n";
    CHECK(run(bin + " validate " + s.path("ok.pdbg") + " > " + out) == 0);
    CHECK(slurp(out) == "VALID\n");
}

TEST_CASE("malformed input exits 2 with a one-line error") {
    Scratch s;
    std::ofstream(s.path("garbage.pdbg")) << "not a pdbg file\n";
    std::string err = s.path("err.txt");
    CHECK(run(bin + " solve " + s.path("garbage.pdbg") + " 2> " + err) == 2);
    std::string msg = slurp(err);
    CHECK(msg.rfind("error:", 0) == 0);
    CHECK(std::count(msg.begin(), msg.end(), '\n') == 1);
}

TEST_CASE("resource cap exits 3") {
    Scratch s;
    CHECK(run(bin + " gen --family k3 | " + bin + " reduce --stage pdbg -o " +
              s.path("k3.pdbg")) == 0);
    CHECK(run(bin + " solve --max-states 10 " + s.path("k3.pdbg") + " 2> /dev/null") == 3);
}

TEST_CASE("unary and decimal shifts solve identically") {
    Scratch s;
    std::string base = "pdbg 1\nk 1\nalphabet a b\nvertex u a b\nvertex v b a\n"
                       "edge u v\nedge v u\n";
    std::ofstream(s.path("dec.pdbg")) << base << "d 1\n";
    std::ofstream(s.path("unary.pdbg")) << base << "d unary 1\n";
    std::string out1 = s.path("out1.txt");
    std::string out2 = s.path("out2.txt");
    CHECK(run(bin + " solve " + s.path("dec.pdbg") + " > " + out1) == 0);
    CHECK(run(bin + " solve " + s.path("unary.pdbg") + " > " + out2) == 0);
    CHECK(slurp(out1) == slurp(out2));
}

TEST_CASE("poly engine dispatch and rejection") {
    Scratch s;
    std::ofstream(s.path("k0.pdbg"))
        << "pdbg 1\nk 0\nalphabet x y\nvertex v - -\nedge v v x y\nedge v v y x\nd 1\n";
    CHECK(run(bin + " solve --engine poly --covering " + s.path("k0.pdbg") +
              " > /dev/null") == 0);
    CHECK(run(bin + " solve --engine auto " + s.path("k0.pdbg") + " > /dev/null") == 0);

    std::ofstream(s.path("k1.pdbg"))
        << "pdbg 1\nk 1\nalphabet a b\nvertex u a b\nvertex v b a\nedge u v\nedge v u\nd 1\n";
    CHECK(run(bin + " solve --engine poly " + s.path("k1.pdbg") + " 2> /dev/null") == 2);

    // Unary alphabet dispatches to the unary decider; the exact engine
    // agrees.
    std::ofstream(s.path("unary.pdbg"))
        << "pdbg 1\nk 1\nalphabet a\nvertex u a a\nedge u u\nd 2\n";
    CHECK(run(bin + " solve --engine poly " + s.path("unary.pdbg") + " > /dev/null") == 0);
    CHECK(run(bin + " solve --engine exact " + s.path("unary.pdbg") + " > /dev/null") == 0);
}

TEST_CASE("reduce with lift and binarize emits loadable instances and traces") {
    Scratch s;
    CHECK(run(bin + " gen --family k3 | " + bin + " reduce --stage pdbg -o " +
              s.path("k3.pdbg")) == 0);
    CHECK(run(bin + " reduce --lift 2 --trace-out " + s.path("lift.trace") + " -o " +
              s.path("lifted.pdbg") + " " + s.path("k3.pdbg")) == 0);
    CHECK(run(bin + " validate " + s.path("lifted.pdbg") + " > /dev/null") == 0);
    CHECK(slurp(s.path("lift.trace")).rfind("pdbg-trace 1\n", 0) == 0);

    CHECK(run(bin + " reduce --binarize -o " + s.path("bin.pdbg") + " " + s.path("k3.pdbg")) ==
          0);
    CHECK(run(bin + " validate " + s.path("bin.pdbg") + " > /dev/null") == 0);

    // Mutually exclusive transforms are rejected.
    CHECK(run(bin + " reduce --lift 2 --binarize " + s.path("k3.pdbg") +
              " 2> /dev/null") == 2);
}

TEST_CASE("reduce --stage promise doubles the graph") {
    Scratch s;
    std::string out = s.path("promise.ug");
    CHECK(run(bin + " gen --family k3 | " + bin + " reduce --stage promise -o " + out) == 0);
    std::string text = slurp(out);
    CHECK(text.find("n 10") != std::string::npos);
    CHECK(std::count(text.begin(), text.end(), '\n') == 2 + 14);  // header + n + edges
    // The promise stage emits no trace file.
    CHECK(run(bin + " gen --family k3 | " + bin + " reduce --stage promise --trace-out " +
              s.path("t.trace") + " 2> /dev/null") == 2);
}

TEST_CASE("export-dot renders labels") {
    Scratch s;
    CHECK(run(bin + " gen --family k3 | " + bin + " reduce --stage pdbg | " + bin +
              " export-dot -o " + s.path("g.dot")) == 0);
    std::string dot = slurp(s.path("g.dot"));
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(dot.find("(t1,t2)") != std::string::npos);
}

TEST_CASE("gen families are deterministic") {
    Scratch s;
    CHECK(run(bin + " gen --family random --n 6 --seed 9 -o " + s.path("a.ug")) == 0);
    CHECK(run(bin + " gen --family random --n 6 --seed 9 -o " + s.path("b.ug")) == 0);
    CHECK(run(bin + " gen --family random --n 6 --seed 10 -o " + s.path("c.ug")) == 0);
    CHECK(slurp(s.path("a.ug")) == slurp(s.path("b.ug")));
    CHECK(slurp(s.path("a.ug")) != slurp(s.path("c.ug")));
    CHECK(run(bin + " gen --family bowtie -o " + s.path("bow.ug")) == 0);
    CHECK(slurp(s.path("bow.ug")).find("n 5") != std::string::npos);
    CHECK(run(bin + " gen --family random-pdbg --seed 4 -o " + s.path("r.pdbg")) == 0);
    CHECK(run(bin + " validate " + s.path("r.pdbg") + " > /dev/null") == 0);
}

#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rotsys/cli.hpp"
#include "rotsys/current_formats.hpp"
#include "rotsys/ladder.hpp"
#include "rotsys/pipeline.hpp"
#include "rotsys/search.hpp"
#include "rotsys/surgery.hpp"
#include "support.hpp"

using namespace rotsys;
using rotsys::testing::data_path;

namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "rotsys");
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

bool contains(const std::string& text, const std::string& part)
{
    return text.find(part) != std::string::npos;
}

std::string strip_comments(const std::string& text)
{
    std::istringstream in(text);
    std::string line, out;
    while (std::getline(in, line))
        if (line.empty() || line[0] != '#')
            out += line + "\n";
    return out;
}

/// Scratch file removed on scope exit.
class TempFile {
public:
    explicit TempFile(const std::string& name, const std::string& text = "")
        : path_(fs::temp_directory_path() / ("rotsys_test_" + name))
    {
        if (!text.empty())
            std::ofstream(path_) << text;
    }
    ~TempFile() { fs::remove(path_); }
    std::string str() const { return path_.string(); }

private:
    fs::path path_;
};

std::string reprint(const std::string& path)
{
    const std::string text = read_file(path);
    const std::string ext = fs::path(path).extension().string();
    if (ext == ".adj")
        return print_adj(parse_adj(text));
    if (ext == ".cgt")
        return print_cgt(parse_cgt(text));
    if (ext == ".log")
        return print_log_document(parse_log_document(text));
    if (ext == ".ldr")
        return print_ladder_template(parse_ladder_template(text));
    if (ext == ".sur")
        return print_script(parse_script(text));
    if (ext == ".src")
        return print_search_spec(parse_search_spec(text));
    if (ext == ".pip")
        return print_pipeline(parse_pipeline(text));
    FAIL("unknown fixture extension " << ext);
    return {};
}

}  // namespace

TEST_CASE("every shipped fixture prints back byte-identically")
{
    int files = 0;
    for (const auto& entry : fs::recursive_directory_iterator(data_path(""))) {
        if (!entry.is_regular_file())
            continue;
        const std::string path = entry.path().string();
        CAPTURE(path);
        CHECK(reprint(path) == read_file(path));
        ++files;
    }
    CHECK(files >= 20);
}

TEST_CASE("verify exit codes")
{
    const std::string table = data_path("tables/table2_k12_minus_c12.adj");
    CHECK(run({"verify", table, "--graph", "hamcomp(12)", "--genus", "4", "--orientable"}).code == exit_pass);
    const Run wrong = run({"verify", table, "--graph", "hamcomp(12)", "--genus", "5"});
    CHECK(wrong.code == exit_fail);
    CHECK(contains(wrong.out, "result fail"));

    TempFile bad("bad.adj", "x: y z\nnot a row\n");
    const Run parse = run({"verify", bad.str()});
    CHECK(parse.code == exit_input);
    CHECK(!parse.err.empty());

    CHECK(run({"verify", data_path("tables/no_such.adj")}).code == exit_input);
}

TEST_CASE("command line errors")
{
    CHECK(run({}).code == exit_input);
    CHECK(run({"nosuch"}).code == exit_input);
    CHECK(run({"verify"}).code == exit_input);
    CHECK(run({"--help"}).code == exit_pass);
}

TEST_CASE("derive reproduces the K13 table")
{
    TempFile out("k13.adj");
    const Run r = run({"derive", data_path("logs/k13.log"), "--check-principles", "--out", out.str()});
    CHECK(r.code == exit_pass);
    CHECK(contains(r.out, "genus=7"));
    CHECK(read_file(out.str()) == strip_comments(read_file(data_path("tables/k13.adj"))));
}

TEST_CASE("derive refuses logs that break a principle")
{
    std::string text = read_file(data_path("logs/k13.log"));
    text.replace(text.find("2 9 3"), 5, "2 9 9");
    TempFile bad("bad.log", text);
    CHECK(run({"derive", bad.str(), "--check-principles"}).code == exit_fail);
}

TEST_CASE("shipped pipelines")
{
    const Run k13 = run({"pipeline", "k13"});
    CHECK(k13.code == exit_pass);
    CHECK(contains(k13.out, "K13 genus 8"));

    const Run o28 = run({"pipeline", "o28"});
    CHECK(o28.code == exit_pass);
    CHECK(contains(o28.out, "genus 48"));

    const Run k18 = run({"pipeline", data_path("pipelines/k18.pip")});
    CHECK(k18.code == exit_pass);
    CHECK(contains(k18.out, "genus 18"));
}

TEST_CASE("bound")
{
    const Run r = run({"bound", "complete", "13"});
    CHECK(r.code == exit_pass);
    CHECK(contains(r.out, "euler_bound=8"));
    CHECK(run({"bound", "octahedral", "28"}).code == exit_pass);
}

TEST_CASE("expand")
{
    const std::string ldr = data_path("templates/o_ladder.ldr");
    CHECK(run({"expand", ldr, "--verify"}).code == exit_pass);
    CHECK(run({"expand", ldr, "--s", "1"}).code == exit_input);
}

TEST_CASE("search fixtures")
{
    const Run k7 = run({"search", data_path("search/k7.src")});
    CHECK(k7.code == exit_pass);
    CHECK(contains(k7.out, "genus=1"));

    const Run k5 = run({"search", data_path("search/k5.src")});
    CHECK(k5.code == exit_fail);
    CHECK(contains(k5.out, "not a multiple of 3"));
}

TEST_CASE("surgery on the K13 start embedding")
{
    TempFile start("k13_start.adj", read_file(data_path("tables/k13.adj")));
    const Run r = run({"surgery", start.str(), data_path("scripts/k13.sur"), "--graph", "complete(12)+join(x0)",
                       "--genus", "8", "--orientable"});
    CHECK(r.code == exit_pass);
}

TEST_CASE("fixtures subcommand runs the acceptance checks")
{
    const Run r = run({"fixtures"});
    CHECK(r.code == exit_pass);
    CHECK(contains(r.out, "PASS  11"));
}

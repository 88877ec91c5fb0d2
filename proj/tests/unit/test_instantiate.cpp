#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <set>
#include <sys/stat.h>
#include <unistd.h>

#include <dynwfa/dyn/api.hpp>
#include <dynwfa/dyn/registry.hpp>
#include <dynwfa/instantiate/instantiate.hpp>

namespace dyn = dynwfa::dyn;
namespace inst = dynwfa::inst;
namespace fs = std::filesystem;

namespace
{
  /// A fresh directory under the temporary directory.
  fs::path scratch_dir(const std::string& tag)
  {
    auto res = fs::temp_directory_path()
               / ("dynwfa-test-" + tag + "-" + std::to_string(::getpid()));
    fs::remove_all(res);
    fs::create_directories(res);
    return res;
  }

  void write_file(const fs::path& p, const std::string& s)
  {
    std::ofstream o(p, std::ios::binary);
    o << s;
  }

  std::string read_file(const fs::path& p)
  {
    std::ifstream is(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(is), {}};
  }

  dyn::signature sig_of(std::initializer_list<const char*> names)
  {
    dyn::signature res;
    for (auto n : names)
      res.syms.push_back(dyn::intern(n));
    return res;
  }
}

TEST_CASE("encode_file_name")
{
  std::vector<std::string> inputs = {
    "mutable_automaton<context<letterset<char_letters>, b>>",
    "a/b", "a%2Fb", "a%b", "a.b", "a:b", "", "%", ".", "..",
    "x y", "x\ny", "x%0Ay", std::string(300, 'a'), std::string(300, 'a') + "b",
  };
  std::set<std::string> seen;
  for (const auto& s : inputs)
    {
      auto e = inst::encode_file_name(s);
      CAPTURE(s);
      CHECK(e.find('/') == std::string::npos);
      CHECK(e.find('.') == std::string::npos);
      CHECK(!e.empty());
      CHECK(e.size() <= 200);
      CHECK(seen.insert(e).second);
    }
  CHECK(inst::encode_file_name("mutable_automaton<context<letterset<char_letters>, b>>")
        == "mutable_automaton<context<letterset<char_letters>, b>>");
  CHECK(inst::encode_file_name("a/b") == "a%2Fb");
}

TEST_CASE("plugin paths")
{
  auto dir = scratch_dir("paths");
  ::setenv("DYNWFA_PLUGINS", dir.c_str(), 1);
  CHECK(inst::plugin_root() == dir);
  auto sig = sig_of({"mutable_automaton<context<letterset<char_letters>, q>>",
                     "wordset<char_letters>"});
  CHECK(inst::algo_base("evaluate", sig)
        == dir / "algos" / "evaluate"
             / "mutable_automaton<context<letterset<char_letters>, q>>, wordset<char_letters>");
  CHECK(inst::context_base("context<letterset<char_letters>, q>")
        == dir / "contexts" / "context<letterset<char_letters>, q>");
  fs::remove_all(dir);
}

TEST_CASE("generated sources")
{
  auto sig = sig_of({"mutable_automaton<context<letterset<char_letters>, q>>",
                     "wordset<char_letters>"});
  CHECK(inst::is_generatable("evaluate"));
  CHECK(inst::is_generatable("focus"));
  CHECK(!inst::is_generatable("no_such_algorithm"));
  auto src = inst::algo_source("evaluate", sig);
  CHECK(src == inst::algo_source("evaluate", sig));
  CHECK(src.find("evaluate_bridge") != std::string::npos);
  CHECK(src.find("dynwfa_plugin_register") != std::string::npos);
  CHECK(src.find("DYNWFA-STAMP:") != std::string::npos);
  CHECK_THROWS(inst::algo_source("no_such_algorithm", sig));
  CHECK_THROWS(inst::algo_source("evaluate", sig_of({"bogus<"})));
  auto csrc = inst::context_source("context<letterset<char_letters>, q>");
  CHECK(csrc == inst::context_source("context<letterset<char_letters>, q>"));
  CHECK(csrc.find("register_context") != std::string::npos);
  CHECK(!inst::host_fingerprint().empty());
  auto cmd = inst::compile_command("/r/x.cc", "/r/x.1.so");
  CHECK(cmd.find("-fPIC") != std::string::npos);
  CHECK(cmd.find("-shared") != std::string::npos);
  CHECK(cmd.find("-DDYNWFA_PLUGIN") != std::string::npos);
  CHECK(cmd.find("'/r/x.cc'") != std::string::npos);
  CHECK(cmd.find("-o '/r/x.1.so'") != std::string::npos);
}

TEST_CASE("extract_precondition")
{
  CHECK(inst::extract_precondition(
          "In file included from x.cc:1:\n"
          "/inc/evaluate.hpp:16:19: error: static assertion failed: requires a free labelset\n"
          "   16 |     static_assert(ls_t::is_free(), \"requires a free labelset\");\n")
        == "requires a free labelset");
  CHECK(inst::extract_precondition(
          "x.hpp:78:5: error: static assertion failed due to requirement "
          "'is_boolean_v<dynwfa::z>': requires Boolean weightset\n")
        == "requires Boolean weightset");
  CHECK(inst::extract_precondition("x.cc:1:1: error: expected ';'\n").empty());
  CHECK(inst::extract_precondition("").empty());
}

TEST_CASE("enrich_error golden")
{
  auto msg = inst::enrich_error(
    "evaluate",
    "a.hpp:1:1: error: static assertion failed: requires a free labelset\n",
    "mutable_automaton<context<wordset<char_letters>, b>>, wordset<char_letters>",
    {"mutable_automaton<context<letterset<char_letters>, z>>, wordset<char_letters>",
     "mutable_automaton<context<letterset<char_letters>, b>>, wordset<char_letters>"},
    "c++ -shared x.cc -o x.so", "/p/x.log");
  CHECK(msg
        == "evaluate: requires a free labelset\n"
           "  failed signature:\n"
           "    mutable_automaton<context<wordset<char_letters>, b>>, wordset<char_letters>\n"
           "  available versions:\n"
           "    mutable_automaton<context<letterset<char_letters>, b>>, wordset<char_letters>\n"
           "    mutable_automaton<context<letterset<char_letters>, z>>, wordset<char_letters>\n"
           "  failed command:\n"
           "    c++ -shared x.cc -o x.so\n"
           "  compilation log:\n"
           "    /p/x.log");
  auto bare = inst::enrich_error("f", "no marker", "s", {}, "cmd");
  CHECK(bare == "  failed signature:\n    s\n  available versions:\n"
                "  failed command:\n    cmd");
}

TEST_CASE("install_atomically")
{
  auto dir = scratch_dir("install");
  write_file(dir / "tmp", "one");
  inst::install_atomically(dir / "tmp", dir / "sub" / "final");
  CHECK(read_file(dir / "sub" / "final") == "one");
  CHECK(!fs::exists(dir / "tmp"));
  // Replacing an existing file.
  write_file(dir / "tmp2", "two");
  inst::install_atomically(dir / "tmp2", dir / "sub" / "final");
  CHECK(read_file(dir / "sub" / "final") == "two");
  // Missing source: both paths in the message.
  auto missing = (dir / "missing").string();
  CHECK_THROWS_WITH(inst::install_atomically(dir / "missing", dir / "x"),
                    doctest::Contains(missing.c_str()));

  // Across devices, when the machine has two.
  struct stat a, b;
  if (::stat(dir.c_str(), &a) == 0 && ::stat("/dev/shm", &b) == 0
      && a.st_dev != b.st_dev && ::access("/dev/shm", W_OK) == 0)
    {
      fs::path tmp = "/dev/shm/dynwfa-test-" + std::to_string(::getpid());
      write_file(tmp, "x");
      CHECK_THROWS_WITH(inst::install_atomically(tmp, dir / "xdev"),
                        doctest::Contains("different filesystems"));
      fs::remove(tmp);
    }
  fs::remove_all(dir);
}

TEST_CASE("runtime instantiation in process")
{
  auto dir = scratch_dir("plugins");
  ::setenv("DYNWFA_PLUGINS", dir.c_str(), 1);

  // A context that is not builtin.
  auto before = inst::num_compiles();
  auto aut = dyn::read_automaton(
    "context = lal_char(st), f2\n$ -> 0\n0 -> 0 s, t\n0 -> 1 t\n1 -> $\n0 -> 2 t\n2 -> $\n");
  CHECK(inst::num_compiles() == before + 1);
  CHECK(dyn::to_string(dyn::evaluate(aut, "t")) == "0");
  CHECK(dyn::to_string(dyn::evaluate(aut, "st")) == "0");
  CHECK(dyn::is_proper(aut));
  CHECK(inst::num_compiles() == before + 1);
  auto s = inst::stats();
  CHECK(s.sources == 1);
  CHECK(s.libraries == 1);
  CHECK(s.logs == 1);
  CHECK(s.bytes > 0);

  // A failing instantiation is compiled once and its error remembered.
  auto z = dyn::read_automaton("context = lal_char(ab), z\n$ -> 0\n0 -> $\n");
  auto mid = inst::num_compiles();
  std::string first, second;
  try
    {
      dyn::determinize(z);
    }
  catch (const dyn::error& e)
    {
      first = e.what();
    }
  try
    {
      dyn::determinize(z);
    }
  catch (const dyn::error& e)
    {
      second = e.what();
    }
  CHECK(first.rfind("determinize: requires Boolean weightset\n", 0) == 0);
  CHECK(first == second);
  CHECK(inst::num_compiles() == mid + 1);
  CHECK(fs::exists(inst::algo_base("determinize", dyn::signature{{z.sname()}})
                     .replace_extension(".log")));

  inst::clear_cache();
  CHECK(inst::stats().sources == 0);
  fs::remove_all(dir);
}

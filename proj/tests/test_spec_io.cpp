#include <gtest/gtest.h>

#include "gdifs/errors.hpp"
#include "gdifs/spec_io.hpp"
#include "support.hpp"

using namespace gdifs;

namespace {

const char* kGolden = R"({
  "vertices": ["u", "v"],
  "edges": [
    {"id": "e1", "from": "u", "to": "u", "ratio": "1/4", "offset": "0"},
    {"id": "e2", "from": "u", "to": "v", "ratio": "2/4", "offset": "1/2"},
    {"id": "e3", "from": "v", "to": "v", "ratio": "1/2", "offset": "0"},
    {"id": "e4", "from": "v", "to": "u", "ratio": "1/4", "offset": "3/4"}
  ]
})";

std::string with_ratio(const std::string& ratio) {
  std::string s = kGolden;
  s.replace(s.find("\"2/4\""), 5, "\"" + ratio + "\"");
  return s;
}

}  // namespace

TEST(LoadSpec, GoldenMatchesFamily) {
  const GraphIFS g = load_spec(kGolden);
  EXPECT_EQ(graph_digest(g), graph_digest(figure1_graph(golden_params())));
  EXPECT_EQ(g.edge(1).map.ratio().str(), "1/2");
}

TEST(LoadSpec, RejectsZeroRatio) {
  EXPECT_THROW(load_spec(with_ratio("0/1")), ValidationError);
  EXPECT_THROW(load_spec(with_ratio("3/2")), ValidationError);
}

TEST(LoadSpec, ParseErrorCarriesLine) {
  try {
    load_spec("{\n  \"vertices\": [\"u\",\n  ]\n}");
    FAIL();
  } catch (const SpecError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_TRUE(e.field().empty());
  }
}

TEST(LoadSpec, FieldErrorNamesField) {
  try {
    load_spec(with_ratio("half"));
    FAIL();
  } catch (const SpecError& e) {
    EXPECT_EQ(e.field(), "edges[1].ratio");
  }
  try {
    load_spec(R"({"vertices": ["u"], "edges": [{"id": "e1", "from": "u", "to": "u"}]})");
    FAIL();
  } catch (const SpecError& e) {
    EXPECT_EQ(e.field(), "edges[0].ratio");
  }
}

TEST(LoadSpec, StructuralErrors) {
  EXPECT_THROW(load_spec(R"({"vertices": ["u"], "edges": [
      {"id": "e1", "from": "u", "to": "w", "ratio": "1/2", "offset": "0"}]})"),
               StructuralError);
}

TEST(DumpSpec, CanonicalAndRoundTrip) {
  const GraphIFS g = load_spec(kGolden);
  const std::string text = dump_spec(g);
  EXPECT_EQ(text.find("2/4"), std::string::npos);
  EXPECT_EQ(dump_spec(load_spec(text)), text);
}

TEST(DumpSpec, RoundTripProperty) {
  std::mt19937_64 rng(gen::kSeed + 60);
  for (int i = 0; i < 200; ++i) {
    const GraphIFS g = gen::random_graph(rng, 4, 4);
    const std::string text = dump_spec(g, "random", "generated");
    const GraphIFS back = load_spec(text);
    ASSERT_EQ(graph_digest(back), graph_digest(g));
    ASSERT_EQ(dump_spec(back, "random", "generated"), text);
    const auto doc = parse_spec_document(text);
    ASSERT_EQ(doc.name, std::optional<std::string>("random"));
  }
}

TEST(CertificateJson, RoundTripReplays) {
  const GraphIFS g = figure1_graph(golden_params());
  std::vector<Certificate> certs = {classify_P2Q(g, 0, 8, true), classify_P2T(g, 1, 8, true),
                                    classify_P2M(golden_params()).first,
                                    classify_P2Q(no_loop_graph(golden_params()), 0, 4, false)};
  for (std::size_t i = 0; i < certs.size(); ++i) {
    const GraphIFS& subject = i == 3 ? no_loop_graph(golden_params()) : g;
    const nlohmann::json j = certificate_to_json(subject, certs[i]);
    const std::string text = j.dump(2);
    const Certificate back = certificate_from_json(subject, nlohmann::json::parse(text));
    EXPECT_TRUE(verify_certificate(subject, back).ok) << text;
    EXPECT_EQ(certificate_to_json(subject, back).dump(2), text);
  }
}

TEST(CertificateJson, SubsetCertificateRoundTrip) {
  const GraphIFS g = subset_graph(subset_example_params());
  const Certificate c = classify_P2Q(g, 1, 8, false);
  const auto back = certificate_from_json(g, certificate_to_json(g, c));
  EXPECT_TRUE(verify_certificate(g, back).ok);
  const Certificate u = classify_P2Q(g, 0, 8, false);
  const auto ub = certificate_from_json(g, certificate_to_json(g, u));
  EXPECT_EQ(ub.verdict, Verdict::Unknown);
  EXPECT_EQ(ub.unmet, u.unmet);
}

TEST(CertificateJson, BadFieldsThrow) {
  const GraphIFS g = figure1_graph(golden_params());
  nlohmann::json j = certificate_to_json(g, classify_P2Q(g, 0, 8, false));
  j["evidence"]["condition1"]["cycle"] = {"e9"};
  EXPECT_THROW(certificate_from_json(g, j), SpecError);
  j = certificate_to_json(g, classify_P2Q(g, 0, 8, false));
  j["verdict"] = "Maybe";
  EXPECT_THROW(certificate_from_json(g, j), SpecError);
}

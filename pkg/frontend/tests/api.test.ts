import { describe, expect, it, vi } from "vitest";

import { AnalyzeResponse, ApiClient, ApiError } from "../src/api.js";

function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}

describe("ApiClient", () => {
  it("posts the draft and optional type to /api/v1/analyze", async () => {
    const fetchFn = vi.fn(async () =>
      jsonResponse({ detected_type: "kandamu" } as Partial<AnalyzeResponse>),
    );
    const client = new ApiClient("http://service", fetchFn);
    await client.analyze("తిీ", "kandamu");
    expect(fetchFn).toHaveBeenCalledWith(
      "http://service/api/v1/analyze",
      expect.objectContaining({ method: "POST" }),
    );
    const body = JSON.parse(fetchFn.mock.calls[0][1]!.body as string);
    expect(body).toEqual({ text: "తిీ", type_name: "kandamu" });
  });

  it("omits type_name when auto-detecting", async () => {
    const fetchFn = vi.fn(async () => jsonResponse({}));
    await new ApiClient("", fetchFn).analyze("తి", null);
    const body = JSON.parse(fetchFn.mock.calls[0][1]!.body as string);
    expect(body).toEqual({ text: "తి" });
  });

  it("raises ApiError with the status on failure", async () => {
    const fetchFn = vi.fn(async () => jsonResponse({ detail: "empty" }, 400));
    await expect(new ApiClient("", fetchFn).analyze("", null)).rejects.toThrow(
      ApiError,
    );
  });

  it("fetches the type list", async () => {
    const fetchFn = vi.fn(async () => jsonResponse([{ type_name: "kandamu" }]));
    const types = await new ApiClient("http://service", fetchFn).types();
    expect(fetchFn).toHaveBeenCalledWith("http://service/api/v1/types");
    expect(types[0].type_name).toBe("kandamu");
  });
});

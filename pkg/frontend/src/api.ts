/** Types and client for the analysis service. The UI never computes
 * prosody itself: everything rendered comes from these responses. */

export interface TokenMark {
  token: string;
  mark: string; // "|" or "U"
}

export interface GanamCell {
  tokens: TokenMark[];
  matched_name: string; // ganam name or "UnMatched"
}

export interface AnalyzeResponse {
  schema_version: number;
  detected_type: string;
  tokens: TokenMark[][];
  ganam_cells: GanamCell[][];
  micro_scores: Record<string, number>;
  chandassu_score: number;
  yati_verdicts: boolean[];
  prasa_modal_aksharam: string | null;
}

export interface TypeInfo {
  type_name: string;
  class_name: string;
  n_paadalu: number;
  n_aksharalu: number | null;
  prasa: boolean;
  yati_sthanam: [number, number];
  yati_paadalu: number[];
  applicable_scores: string[];
}

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private baseUrl: string = "",
    private fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  async analyze(text: string, typeName: string | null): Promise<AnalyzeResponse> {
    const body: Record<string, unknown> = { text };
    if (typeName !== null) body.type_name = typeName;
    const response = await this.fetchFn(`${this.baseUrl}/api/v1/analyze`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!response.ok) {
      throw new ApiError(response.status, `analyze failed: ${response.status}`);
    }
    return (await response.json()) as AnalyzeResponse;
  }

  async types(): Promise<TypeInfo[]> {
    const response = await this.fetchFn(`${this.baseUrl}/api/v1/types`);
    if (!response.ok) {
      throw new ApiError(response.status, `types failed: ${response.status}`);
    }
    return (await response.json()) as TypeInfo[];
  }
}

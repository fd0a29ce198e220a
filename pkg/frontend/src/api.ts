// Thin fetch client for the analysis service.  The UI computes no rigidity
// itself: every verdict shown on screen came back from one of these calls.

import type {
  AnalyzeOutcome,
  FlexResponse,
  FrameworkDocument,
  RefusalResponse,
} from './types.js'

export interface AnalysisClient {
  analyze(doc: FrameworkDocument): Promise<AnalyzeOutcome>
  flex(doc: FrameworkDocument, coloring: number, frames: number,
       tRange: [number, number]): Promise<FlexResponse>
  generateGrid(a: number, b: number): Promise<FrameworkDocument>
  health(): Promise<{ status: string; version: string }>
}

export class HttpApiClient implements AnalysisClient {
  constructor(private readonly baseUrl: string) {}

  private async post(path: string, payload: unknown): Promise<Response> {
    return fetch(`${this.baseUrl}${path}`, {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify(payload),
    })
  }

  async analyze(doc: FrameworkDocument): Promise<AnalyzeOutcome> {
    const response = await this.post('/api/analyze', doc)
    if (response.status === 200) {
      return { kind: 'ok', analysis: await response.json() }
    }
    if (response.status === 409) {
      return { kind: 'refused', refusal: (await response.json()) as RefusalResponse }
    }
    throw await errorFrom(response)
  }

  async flex(doc: FrameworkDocument, coloring: number, frames: number,
             tRange: [number, number]): Promise<FlexResponse> {
    const response = await this.post('/api/flex', {
      framework: doc,
      coloring,
      frames,
      t_range: tRange,
    })
    if (response.status !== 200) throw await errorFrom(response)
    return response.json()
  }

  async generateGrid(a: number, b: number): Promise<FrameworkDocument> {
    const response = await this.post('/api/generate', { kind: 'grid', a, b })
    if (response.status !== 200) throw await errorFrom(response)
    return response.json()
  }

  async health(): Promise<{ status: string; version: string }> {
    const response = await fetch(`${this.baseUrl}/api/health`)
    if (response.status !== 200) throw await errorFrom(response)
    return response.json()
  }
}

async function errorFrom(response: Response): Promise<Error> {
  let message = `HTTP ${response.status}`
  try {
    const body = await response.json()
    if (body && typeof body.message === 'string') message += `: ${body.message}`
  } catch {
    // non-JSON error body; keep the status line
  }
  return new Error(message)
}

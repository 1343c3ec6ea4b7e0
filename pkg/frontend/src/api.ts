import type { ApiResponse, DialectChoice, DialectInfo } from './types.js';

export class ApiError extends Error {
  status: number;

  constructor(message: string, status: number) {
    super(message);
    this.status = status;
  }
}

async function parseError(res: Response): Promise<ApiError> {
  let message = `HTTP ${res.status}`;
  try {
    const body = (await res.json()) as { error?: string };
    if (body && typeof body.error === 'string') message = body.error;
  } catch {
    /* keep the generic message */
  }
  return new ApiError(message, res.status);
}

export async function disambiguate(
  baseUrl: string,
  text: string,
  dialect: DialectChoice,
): Promise<ApiResponse> {
  const res = await fetch(`${baseUrl}/api/disambiguate`, {
    method: 'POST',
    headers: { 'Content-Type': 'application/json' },
    body: JSON.stringify({ text, dialect }),
  });
  if (!res.ok) throw await parseError(res);
  return (await res.json()) as ApiResponse;
}

export async function dialects(baseUrl: string): Promise<DialectInfo[]> {
  const res = await fetch(`${baseUrl}/api/dialects`);
  if (!res.ok) throw await parseError(res);
  return (await res.json()) as DialectInfo[];
}
